#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kpd/matrix.hpp"

namespace kpd {

/// How `holds` and `condition_holds` of a LawReport must relate.
enum class Relation {
    identity,     // holds must be true; condition_holds is unused
    equivalence,  // holds <=> condition_holds
    implication,  // condition_holds => holds
};

/// Outcome of one law check on one instance. Inputs and witnesses are kept as
/// matrices (scalars as 1x1) so a failing instance can be written out and
/// replayed.
struct LawReport {
    std::string law_id;
    Relation relation = Relation::identity;
    bool holds = false;
    bool condition_holds = false;
    /// Secondary assertions bundled with the instance (extra identities that
    /// must hold alongside the main relation).
    bool side_checks = true;
    std::vector<std::pair<std::string, Matrix>> inputs;
    std::vector<std::pair<std::string, long long>> params;
    std::vector<std::pair<std::string, Matrix>> witnesses;
    std::string note;

    /// True when the instance agrees with the law.
    bool consistent() const noexcept {
        if (!side_checks) return false;
        switch (relation) {
        case Relation::identity: return holds;
        case Relation::equivalence: return holds == condition_holds;
        case Relation::implication: return !condition_holds || holds;
        }
        return false;
    }

    const Matrix& input(const std::string& name) const;
    long long param(const std::string& name) const;
};

inline Matrix scalar_matrix(const Field& f, const Scalar& s) { return Matrix(f, 1, 1, {s}); }

}  // namespace kpd
