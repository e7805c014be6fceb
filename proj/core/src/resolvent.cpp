#include "spectrakit/resolvent.hpp"

#include <algorithm>

#include "spectrakit/errors.hpp"

namespace spectrakit {

namespace {

BlockLabel label_block(const BlockSpectrumSummary& s, LogPolar lambda,
                       std::string* obstruction) {
    double t = lambda.logmod;
    switch (s.kind) {
        case BlockKind::Aperiodic:
            if (s.max_mean < t) return BlockLabel::E;
            if (s.min_mean > t) return BlockLabel::F;
            *obstruction = "annulus contains the query radius";
            return BlockLabel::Obstructed;
        case BlockKind::Cycle:
            if (s.isolated) {
                if (s.radial.member(lambda)) {
                    *obstruction = "isolated cycle eigenvalue matches lambda";
                    return BlockLabel::Obstructed;
                }
                if (s.max_mean < t) return BlockLabel::E;
                if (s.min_mean > t) return BlockLabel::F;
                return BlockLabel::P;  // on the circle but not an eigenvalue
            }
            if (s.max_mean < t) return BlockLabel::E;
            if (s.min_mean > t) return BlockLabel::F;
            *obstruction = "non-isolated cycle mean equals the query radius";
            return BlockLabel::Obstructed;
        case BlockKind::ClopenPeriodic:
            if (s.radial.member(lambda)) {
                *obstruction = "clopen periodic family spectrum contains lambda";
                return BlockLabel::Obstructed;
            }
            return BlockLabel::P;
    }
    return BlockLabel::Obstructed;
}

}  // namespace

OneSidedResult one_sided(const System& sys, LogPolar lambda) {
    if (!sys.zero_free()) {
        throw UnsupportedError("ZeroWeightUnsupported",
                               "one-sided analysis needs a zero-free weight");
    }

    OneSidedResult out;
    PartitionAssignment part;
    part.blocks.reserve(sys.block_count());

    bool obstructed = false;
    for (size_t i = 0; i < sys.block_count(); ++i) {
        std::string reason;
        BlockLabel label = label_block(block_radial_spectrum(sys, i), lambda, &reason);
        part.blocks.push_back(label);
        if (label == BlockLabel::Obstructed && !obstructed) {
            obstructed = true;
            out.obstruction = "block " + block_id(sys.block(i)) + ": " + reason;
        }
    }
    if (obstructed) {
        out.status = OneSidedStatus::Neither;
        return out;
    }

    size_t rising = 0, falling = 0;
    for (size_t ti = 0; ti < sys.trajectory_count(); ++ti) {
        // Tail blocks are aperiodic or trajectory-referenced cycles, so their
        // labels here are E or F only.
        BlockLabel bw = part.blocks[sys.backward_anchor(ti).block_index];
        BlockLabel fw = part.blocks[sys.forward_anchor(ti).block_index];
        if (bw == BlockLabel::E && fw == BlockLabel::F) {
            part.trajectories.push_back(TrajectoryOrientation::EtoF);
            ++rising;
        } else if (bw == BlockLabel::F && fw == BlockLabel::E) {
            part.trajectories.push_back(TrajectoryOrientation::FtoE);
            ++falling;
        } else if (bw == BlockLabel::E) {
            part.trajectories.push_back(TrajectoryOrientation::InsideE);
        } else {
            part.trajectories.push_back(TrajectoryOrientation::InsideF);
        }
    }

    out.partition = std::move(part);
    if (rising == 0 && falling == 0) {
        out.status = OneSidedStatus::Both;
    } else if (falling == 0) {
        out.status = OneSidedStatus::RightOnly;
    } else if (rising == 0) {
        out.status = OneSidedStatus::LeftOnly;
    } else {
        out.status = OneSidedStatus::Neither;
        out.obstruction = "straddling trajectories in both orientations";
    }
    return out;
}

SpectralSet full_spectrum(const System& sys) {
    SpectralSet out;
    auto spectra = block_spectra(sys);
    for (const auto& s : spectra) out = set_union(out, s.radial);
    for (size_t ti = 0; ti < sys.trajectory_count(); ++ti) {
        const auto& bw = spectra[sys.backward_anchor(ti).block_index];
        const auto& fw = spectra[sys.forward_anchor(ti).block_index];
        out.add_interval(std::min(bw.min_mean, fw.min_mean),
                         std::max(bw.max_mean, fw.max_mean));
    }
    out.set_includes_zero(!sys.zero_free());
    return out;
}

const char* to_string(OneSidedStatus s) {
    switch (s) {
        case OneSidedStatus::Both: return "both";
        case OneSidedStatus::RightOnly: return "right_only";
        case OneSidedStatus::LeftOnly: return "left_only";
        case OneSidedStatus::Neither: return "neither";
    }
    return "?";
}

const char* to_string(BlockLabel l) {
    switch (l) {
        case BlockLabel::E: return "E";
        case BlockLabel::F: return "F";
        case BlockLabel::P: return "P";
        case BlockLabel::Obstructed: return "obstructed";
    }
    return "?";
}

const char* to_string(TrajectoryOrientation o) {
    switch (o) {
        case TrajectoryOrientation::InsideE: return "inside_E";
        case TrajectoryOrientation::InsideF: return "inside_F";
        case TrajectoryOrientation::EtoF: return "E_to_F";
        case TrajectoryOrientation::FtoE: return "F_to_E";
    }
    return "?";
}

}  // namespace spectrakit
