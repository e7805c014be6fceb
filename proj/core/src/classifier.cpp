#include "spectrakit/classifier.hpp"

#include <algorithm>

#include "spectrakit/cycle_means.hpp"
#include "spectrakit/errors.hpp"
#include "spectrakit/essential.hpp"
#include "spectrakit/resolvent.hpp"

namespace spectrakit {

namespace {

void require_zero_free_trajectory(const System& sys, size_t traj) {
    for (const auto& entry : sys.trajectory(traj).core) {
        if (!entry.has_value()) {
            throw UnsupportedError("ZeroWeightUnsupported",
                                   "crossing analysis needs a zero-free trajectory");
        }
    }
}

}  // namespace

bool crossing_exists(const System& sys, size_t traj, double t, CrossingDirection dir) {
    require_zero_free_trajectory(sys, traj);
    double bw = sys.backward_anchor(traj).mean().value();
    double fw = sys.forward_anchor(traj).mean().value();
    if (dir == CrossingDirection::Kernel) return bw <= t && t <= fw;
    return fw <= t && t <= bw;
}

long crossing_base_index(const System& sys, size_t traj, double t, CrossingDirection dir) {
    require_zero_free_trajectory(sys, traj);
    long core_len = static_cast<long>(sys.trajectory(traj).core.size());
    long lo = -static_cast<long>(sys.backward_anchor(traj).period());
    long hi = core_len + sys.forward_anchor(traj).period();

    // Cumulative excess C with C(lo) = 0; position j scores C(j).
    double best = 0.0, c = 0.0;
    long best_index = lo;
    for (long j = lo; j <= hi; ++j) {
        bool better = dir == CrossingDirection::Kernel ? c < best : c > best;
        if (better) {
            best = c;
            best_index = j;
        }
        if (j < hi) c += sys.weight_at(traj, j)->logmod - t;
    }
    return best_index;
}

namespace {

FredholmReport classify_zero(const System& sys) {
    FredholmReport r;
    r.lambda = std::nullopt;
    long zeros = static_cast<long>(sys.zero_count());
    if (zeros == 0) {
        r.status = FredholmReport::Status::Resolvent;
        r.sigma_membership = {{false, false, false, false, false}};
        return r;
    }
    // The zero set is finite and isolated by construction, which in this
    // model already forces index 0 with one dimension per zero.
    r.status = FredholmReport::Status::Fredholm;
    r.nul = r.def = zeros;
    r.index = 0;
    return r;
}

}  // namespace

FredholmReport classify(const System& sys, const Lambda& lambda) {
    if (!lambda.has_value()) return classify_zero(sys);
    if (!sys.zero_free()) {
        throw UnsupportedError("ZeroWeightUnsupported",
                               "classification at nonzero lambda needs zero-free weights");
    }

    FredholmReport r;
    r.lambda = lambda;
    double t = lambda->logmod;
    auto spectra = block_spectra(sys);

    // Non-isolated witnesses kill semi-Fredholm behaviour outright.
    for (const auto& s : spectra) {
        const std::string& id = block_id(sys.block(s.block_index));
        switch (s.kind) {
            case BlockKind::Aperiodic:
                if (s.min_mean <= t && t <= s.max_mean) {
                    r.status = FredholmReport::Status::NotSemiFredholm;
                    r.witness = "block " + id + ": annulus contains the query radius";
                }
                break;
            case BlockKind::Cycle:
                if (!s.isolated && s.min_mean == t) {
                    r.status = FredholmReport::Status::NotSemiFredholm;
                    r.witness = "block " + id + ": non-isolated cycle mean equals the query radius";
                }
                break;
            case BlockKind::ClopenPeriodic:
                if (s.radial.member(lambda)) {
                    r.status = FredholmReport::Status::NotSemiFredholm;
                    r.witness = "block " + id + ": clopen periodic family spectrum contains lambda";
                }
                break;
        }
        if (r.status == FredholmReport::Status::NotSemiFredholm) break;
    }

    long m_ker = 0, m_def = 0, matched = 0;
    if (r.status != FredholmReport::Status::NotSemiFredholm) {
        for (size_t ti = 0; ti < sys.trajectory_count(); ++ti) {
            double bw = sys.backward_anchor(ti).mean().value();
            double fw = sys.forward_anchor(ti).mean().value();
            if (bw < t && t < fw) {
                r.kernel_trajectories.push_back(sys.trajectory(ti).id);
                ++m_ker;
            } else if (fw < t && t < bw) {
                r.deficiency_trajectories.push_back(sys.trajectory(ti).id);
                ++m_def;
            }
        }
        for (const auto& s : spectra) {
            if (s.kind == BlockKind::Cycle && s.isolated && s.radial.member(lambda)) {
                r.matched_cycles.push_back(block_id(sys.block(s.block_index)));
                ++matched;
            }
        }

        // Remainder: counted orbits and matched cycles taken out; lambda must
        // be in its resolvent for the Fredholm verdict to stand.
        SystemDescription rest;
        for (const auto& b : sys.description().blocks) {
            if (std::find(r.matched_cycles.begin(), r.matched_cycles.end(), block_id(b)) ==
                r.matched_cycles.end()) {
                rest.blocks.push_back(b);
            }
        }
        auto counted = [&](const std::string& id) {
            return std::find(r.kernel_trajectories.begin(), r.kernel_trajectories.end(), id) !=
                       r.kernel_trajectories.end() ||
                   std::find(r.deficiency_trajectories.begin(),
                             r.deficiency_trajectories.end(),
                             id) != r.deficiency_trajectories.end();
        };
        for (const auto& tr : sys.description().trajectories) {
            if (!counted(tr.id)) rest.trajectories.push_back(tr);
        }

        OneSidedStatus rest_status = OneSidedStatus::Both;
        std::string rest_obstruction;
        if (!rest.blocks.empty()) {
            auto res = one_sided(System(std::move(rest)), *lambda);
            rest_status = res.status;
            rest_obstruction = res.obstruction;
        }

        switch (rest_status) {
            case OneSidedStatus::Both:
                if (m_ker + m_def + matched == 0) {
                    r.status = FredholmReport::Status::Resolvent;
                } else {
                    r.status = FredholmReport::Status::Fredholm;
                    r.nul = m_ker + matched;
                    r.def = m_def + matched;
                    r.index = m_ker - m_def;
                }
                break;
            case OneSidedStatus::RightOnly:
                r.status = FredholmReport::Status::SemiFredholmOnly;
                r.finite_side = FredholmReport::FiniteSide::Cokernel;
                r.finite_count = m_def + matched;
                break;
            case OneSidedStatus::LeftOnly:
                r.status = FredholmReport::Status::SemiFredholmOnly;
                r.finite_side = FredholmReport::FiniteSide::Kernel;
                r.finite_count = m_ker + matched;
                break;
            case OneSidedStatus::Neither:
                r.status = FredholmReport::Status::NotSemiFredholm;
                r.witness = "remainder system: " + rest_obstruction;
                break;
        }
    }

    auto ess = essential_spectra(sys);
    r.sigma_membership = {{ess.sigma1.member(lambda), ess.sigma2.member(lambda),
                           ess.sigma3.member(lambda), ess.sigma4.member(lambda),
                           ess.sigma5.member(lambda)}};
    return r;
}

const char* to_string(FredholmReport::Status s) {
    switch (s) {
        case FredholmReport::Status::Resolvent: return "resolvent";
        case FredholmReport::Status::Fredholm: return "fredholm";
        case FredholmReport::Status::SemiFredholmOnly: return "semi_fredholm_only";
        case FredholmReport::Status::NotSemiFredholm: return "not_semi_fredholm";
    }
    return "?";
}

}  // namespace spectrakit
