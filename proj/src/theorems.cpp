#include "nrlab/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace nrlab {

const char* to_string(Status s) {
    switch (s) {
        case Status::Skipped: return "Skipped";
        case Status::Verified: return "Verified";
        case Status::Refuted: return "Refuted";
    }
    return "unknown";
}

namespace {

TheoremSpec make_spec(std::string id, std::string description,
                      std::vector<std::string> structural_pre, Scope scope,
                      bool require_nonzero, std::vector<std::string> hypothesis_sources,
                      ConclusionKind conclusion) {
    TheoremSpec s;
    s.id = std::move(id);
    s.description = std::move(description);
    s.structural_pre = std::move(structural_pre);
    s.scope = scope;
    s.require_nonzero_derivation = require_nonzero;
    s.hypothesis_sources = std::move(hypothesis_sources);
    for (const std::string& src : s.hypothesis_sources)
        s.hypotheses.push_back(parse_identity(src));
    s.conclusion = conclusion;
    return s;
}

Witness note_only(std::string note) { return Witness{{}, std::move(note)}; }

// First failing law of the strong commutative-ring conclusion:
// abelian addition, commutative multiplication, right distributivity.
Witness commutative_ring_witness(const NearRing& n) {
    if (auto p = abelian_violation(n))
        return Witness{{{"x", p->first}, {"y", p->second}}, "addition not abelian"};
    if (auto p = mul_commutativity_violation(n))
        return Witness{{{"x", p->first}, {"y", p->second}}, "multiplication not commutative"};
    if (auto t = right_distributivity_violation(n))
        return Witness{{{"x", (*t)[0]}, {"y", (*t)[1]}, {"z", (*t)[2]}},
                       "right distributivity fails"};
    return note_only("commutative ring");
}

const char* kVarNames[3] = {"x", "y", "z"};

Witness identity_failure_witness(const Identity& id, const IdentityFailure& f) {
    Witness w;
    for (int var : id.vars)
        w.bindings.push_back({kVarNames[var], f.env[static_cast<std::size_t>(var)]});
    if (id.kind == Identity::Kind::Equation)
        w.note = "lhs = " + std::to_string(f.lhs_value) +
                 ", rhs = " + std::to_string(f.rhs_value);
    else
        w.note = "value " + std::to_string(f.lhs_value) + " not central";
    return w;
}

class VerdictBuilder {
public:
    VerdictBuilder(const NearRing& n, const TheoremSpec& spec, const CheckOptions& opts,
                   std::vector<Verdict>& out)
        : n_(n), spec_(spec), opts_(opts), out_(out),
          last_(std::chrono::steady_clock::now()) {}

    void push(std::optional<int> derivation, Status status, std::optional<Witness> witness) {
        Verdict v;
        v.structure = n_.name;
        v.spec = spec_.id;
        v.derivation = derivation;
        v.status = status;
        v.witness = std::move(witness);
        if (opts_.with_timing) {
            const auto now = std::chrono::steady_clock::now();
            v.timing_us =
                std::chrono::duration_cast<std::chrono::microseconds>(now - last_).count();
            last_ = now;
        }
        out_.push_back(std::move(v));
    }

private:
    const NearRing& n_;
    const TheoremSpec& spec_;
    const CheckOptions& opts_;
    std::vector<Verdict>& out_;
    std::chrono::steady_clock::time_point last_;
};

void check_structure_scope(const NearRing& n, const TheoremSpec& spec, VerdictBuilder& rows) {
    const std::vector<bool> central = center_mask(n);

    if (spec.id == "L1a") {
        bool any = false;
        for (Element z = 1; z < n.order; ++z) {
            if (!central[static_cast<std::size_t>(z)]) continue;
            any = true;
            if (is_zero_divisor(n, z)) {
                rows.push(std::nullopt, Status::Refuted,
                          Witness{{{"z", z}}, "central nonzero z is a zero divisor"});
                return;
            }
        }
        if (!any)
            rows.push(std::nullopt, Status::Skipped,
                      note_only("center has no nonzero element"));
        else
            rows.push(std::nullopt, Status::Verified, std::nullopt);
        return;
    }

    if (spec.id == "L1b") {
        std::optional<Element> qualifying;
        for (Element z = 1; z < n.order; ++z)
            if (central[static_cast<std::size_t>(z)] &&
                central[static_cast<std::size_t>(n.add(z, z))]) {
                qualifying = z;
                break;
            }
        if (!qualifying) {
            rows.push(std::nullopt, Status::Skipped,
                      note_only("no nonzero central z with z + z central"));
            return;
        }
        if (auto p = abelian_violation(n)) {
            rows.push(std::nullopt, Status::Refuted,
                      Witness{{{"z", *qualifying}, {"x", p->first}, {"y", p->second}},
                              "addition not abelian"});
            return;
        }
        rows.push(std::nullopt, Status::Verified, std::nullopt);
        return;
    }

    if (spec.id == "L1c") {
        bool any = false;
        for (Element z = 1; z < n.order; ++z) {
            if (!central[static_cast<std::size_t>(z)]) continue;
            for (Element x = 0; x < n.order; ++x) {
                if (!central[static_cast<std::size_t>(n.mul(x, z))] &&
                    !central[static_cast<std::size_t>(n.mul(z, x))])
                    continue;
                any = true;
                if (!central[static_cast<std::size_t>(x)]) {
                    rows.push(std::nullopt, Status::Refuted,
                              Witness{{{"z", z}, {"x", x}},
                                      "xz or zx is central but x is not"});
                    return;
                }
            }
        }
        if (!any)
            rows.push(std::nullopt, Status::Skipped, note_only("no qualifying (z, x) pair"));
        else
            rows.push(std::nullopt, Status::Verified, std::nullopt);
        return;
    }

    if (spec.id == "L2") {
        const auto ideal = semigroup_ideal_in_center(n);
        if (!ideal) {
            rows.push(std::nullopt, Status::Skipped,
                      note_only("no nonzero semigroup ideal inside the center"));
            return;
        }
        if (!structural_predicates(n).is_commutative_ring) {
            Witness w = commutative_ring_witness(n);
            w.bindings.insert(w.bindings.begin(), {"a", ideal->generator});
            rows.push(std::nullopt, Status::Refuted, std::move(w));
            return;
        }
        rows.push(std::nullopt, Status::Verified, std::nullopt);
        return;
    }

    if (spec.id == "L3") {
        const bool admits = admits_mult_derivation(n);
        const bool zs = is_zero_symmetric(n);
        if (admits == zs) {
            rows.push(std::nullopt, Status::Verified, std::nullopt);
            return;
        }
        if (admits) {
            Element x = 0;
            while (x < n.order && n.mul(0, x) == 0) ++x;
            rows.push(std::nullopt, Status::Refuted,
                      Witness{{{"x", x}}, "a derivation exists but 0x is nonzero"});
        } else {
            rows.push(std::nullopt, Status::Refuted,
                      note_only("zero-symmetric but no derivation exists"));
        }
        return;
    }

    throw std::logic_error("unhandled structure-scope spec " + spec.id);
}

} // namespace

const std::vector<TheoremSpec>& registry() {
    static const std::vector<TheoremSpec> specs = [] {
        std::vector<TheoremSpec> v;
        v.push_back(make_spec(
            "L1a", "nonzero central elements are not zero divisors",
            {"three_prime"}, Scope::Structure, false, {}, ConclusionKind::NotZeroDivisor));
        v.push_back(make_spec(
            "L1b", "a nonzero central z with z + z central forces abelian addition",
            {"three_prime"}, Scope::Structure, false, {}, ConclusionKind::AbelianAddition));
        v.push_back(make_spec(
            "L1c", "central nonzero z with xz or zx central forces x central",
            {"three_prime"}, Scope::Structure, false, {}, ConclusionKind::ElementInCenter));
        v.push_back(make_spec(
            "L2", "a nonzero semigroup ideal inside the center forces a commutative ring",
            {"three_prime"}, Scope::Structure, false, {}, ConclusionKind::CommutativeRing));
        v.push_back(make_spec(
            "L3", "multiplicative derivations exist exactly on zero-symmetric near-rings",
            {}, Scope::Structure, false, {}, ConclusionKind::DerivationExistence));
        v.push_back(make_spec(
            "L5", "with nonzero d, d(N)a = 0 or ad(N) = 0 forces a = 0",
            {"three_prime"}, Scope::PerDerivation, true, {}, ConclusionKind::ElementIsZero));
        v.push_back(make_spec(
            "T1", "nonzero d with d(N) inside the center forces a commutative ring",
            {"three_prime"}, Scope::PerDerivation, true, {"d(x) in Z"},
            ConclusionKind::CommutativeRing));
        v.push_back(make_spec(
            "T2", "d(x*y) = d(x)*d(y) forces d = 0",
            {"three_prime"}, Scope::PerDerivation, false, {"d(x*y) = d(x)*d(y)"},
            ConclusionKind::DIsZero));
        v.push_back(make_spec(
            "T3", "d(x*y) = d(y)*d(x) forces d = 0",
            {"three_prime"}, Scope::PerDerivation, false, {"d(x*y) = d(y)*d(x)"},
            ConclusionKind::DIsZero));
        v.push_back(make_spec(
            "T4", "nonzero d with d([x,y]) = [d(x),y] forces a commutative ring",
            {"three_prime"}, Scope::PerDerivation, true, {"d([x,y]) = [d(x),y]"},
            ConclusionKind::CommutativeRing));
        v.push_back(make_spec(
            "T5", "nonzero d with [d(x),y] = [d(x),d(y)] forces a commutative ring",
            {"three_prime"}, Scope::PerDerivation, true, {"[d(x),y] = [d(x),d(y)]"},
            ConclusionKind::CommutativeRing));
        v.push_back(make_spec(
            "T6", "nonzero d with [d(x),y] central forces a commutative ring",
            {"three_prime"}, Scope::PerDerivation, true, {"[d(x),y] in Z"},
            ConclusionKind::CommutativeRing));
        return v;
    }();
    return specs;
}

std::optional<TheoremSpec> find_spec(const std::string& id) {
    for (const TheoremSpec& s : registry())
        if (s.id == id) return s;
    return std::nullopt;
}

TheoremSpec make_identity_spec(Identity identity) {
    TheoremSpec s;
    s.id = "identity";
    s.description = to_string(identity);
    s.scope = Scope::PerDerivation;
    s.conclusion = ConclusionKind::IdentityHolds;
    s.custom_identity = std::move(identity);
    return s;
}

bool hand_coded_hypothesis_holds(const std::string& id, const NearRing& n,
                                 const DerivationMap& d, const std::vector<bool>& center) {
    auto dv = [&](Element x) { return d[static_cast<std::size_t>(x)]; };
    if (id == "T1") {
        for (Element x = 0; x < n.order; ++x)
            if (!center[static_cast<std::size_t>(dv(x))]) return false;
        return true;
    }
    if (id == "T2") {
        for (Element x = 0; x < n.order; ++x)
            for (Element y = 0; y < n.order; ++y)
                if (dv(n.mul(x, y)) != n.mul(dv(x), dv(y))) return false;
        return true;
    }
    if (id == "T3") {
        for (Element x = 0; x < n.order; ++x)
            for (Element y = 0; y < n.order; ++y)
                if (dv(n.mul(x, y)) != n.mul(dv(y), dv(x))) return false;
        return true;
    }
    if (id == "T4") {
        for (Element x = 0; x < n.order; ++x)
            for (Element y = 0; y < n.order; ++y)
                if (dv(lie(n, x, y)) != lie(n, dv(x), y)) return false;
        return true;
    }
    if (id == "T5") {
        for (Element x = 0; x < n.order; ++x)
            for (Element y = 0; y < n.order; ++y)
                if (lie(n, dv(x), y) != lie(n, dv(x), dv(y))) return false;
        return true;
    }
    if (id == "T6") {
        for (Element x = 0; x < n.order; ++x)
            for (Element y = 0; y < n.order; ++y)
                if (!center[static_cast<std::size_t>(lie(n, dv(x), y))]) return false;
        return true;
    }
    return true;
}

std::vector<Verdict> check_theorem(const NearRing& n, const TheoremSpec& spec,
                                   const CheckOptions& opts) {
    std::vector<Verdict> out;
    VerdictBuilder rows(n, spec, opts, out);

    for (const std::string& name : spec.structural_pre) {
        if (name == "three_prime") {
            if (!is_3_prime(n)) {
                rows.push(std::nullopt, Status::Skipped, note_only("not 3-prime"));
                return out;
            }
        } else {
            throw std::logic_error("unknown structural precondition " + name);
        }
    }

    if (spec.scope == Scope::Structure) {
        check_structure_scope(n, spec, rows);
        return out;
    }

    const std::vector<bool> central = center_mask(n);
    std::optional<StructuralPredicates> preds;
    std::optional<Witness> ring_witness;
    int index = -1;

    for_each_mult_derivation(n, [&](const DerivationMap& d) {
        ++index;
        if (spec.require_nonzero_derivation && is_zero_map(d)) {
            rows.push(index, Status::Skipped, note_only("derivation is zero"));
            return true;
        }

        bool hypothesis = true;
        if (opts.use_dsl_hypotheses) {
            for (const Identity& id : spec.hypotheses)
                if (!holds_for_all(n, d, id, &central)) {
                    hypothesis = false;
                    break;
                }
        } else {
            hypothesis = hand_coded_hypothesis_holds(spec.id, n, d, central);
        }
        if (!hypothesis) {
            rows.push(index, Status::Skipped, note_only("hypothesis fails"));
            return true;
        }

        switch (spec.conclusion) {
            case ConclusionKind::DIsZero: {
                if (is_zero_map(d)) {
                    rows.push(index, Status::Verified, std::nullopt);
                } else {
                    Element x = 0;
                    while (d[static_cast<std::size_t>(x)] == 0) ++x;
                    rows.push(index, Status::Refuted,
                              Witness{{{"x", x}}, "d(x) is nonzero"});
                }
                break;
            }
            case ConclusionKind::CommutativeRing: {
                if (!preds) {
                    preds = structural_predicates(n);
                    if (!preds->is_commutative_ring) ring_witness = commutative_ring_witness(n);
                }
                if (preds->is_commutative_ring)
                    rows.push(index, Status::Verified, std::nullopt);
                else
                    rows.push(index, Status::Refuted, ring_witness);
                break;
            }
            case ConclusionKind::ElementIsZero: {
                std::optional<Witness> bad;
                for (Element a = 1; a < n.order && !bad; ++a) {
                    const AnnihilatorChecks checks = annihilator_checks(n, d, a);
                    if (checks.dNa_zero)
                        bad = Witness{{{"a", a}}, "d(N)a = 0 but a is nonzero"};
                    else if (checks.adN_zero)
                        bad = Witness{{{"a", a}}, "ad(N) = 0 but a is nonzero"};
                }
                if (bad)
                    rows.push(index, Status::Refuted, std::move(bad));
                else
                    rows.push(index, Status::Verified, std::nullopt);
                break;
            }
            case ConclusionKind::IdentityHolds: {
                const Identity& id = *spec.custom_identity;
                if (auto f = identity_violation(n, d, id, &central))
                    rows.push(index, Status::Refuted, identity_failure_witness(id, *f));
                else
                    rows.push(index, Status::Verified, std::nullopt);
                break;
            }
            default:
                throw std::logic_error("conclusion kind not valid per derivation");
        }
        return true;
    });

    if (index < 0)
        rows.push(std::nullopt, Status::Skipped, note_only("no derivations"));
    return out;
}

std::vector<Verdict> sweep(const std::vector<NearRing>& catalog,
                           const std::vector<TheoremSpec>& specs, const CheckOptions& opts) {
    std::vector<Verdict> out;
    for (const NearRing& n : catalog)
        for (const TheoremSpec& spec : specs) {
            std::vector<Verdict> rows = check_theorem(n, spec, opts);
            out.insert(out.end(), std::make_move_iterator(rows.begin()),
                       std::make_move_iterator(rows.end()));
        }
    return out;
}

SweepSummary summarize(const std::vector<Verdict>& verdicts) {
    SweepSummary s;
    for (const Verdict& v : verdicts) {
        switch (v.status) {
            case Status::Skipped: ++s.skipped; break;
            case Status::Verified: ++s.verified; break;
            case Status::Refuted: ++s.refuted; break;
        }
    }
    return s;
}

TheoremSpec weaken_spec(const TheoremSpec& spec, const std::vector<std::string>& drop) {
    TheoremSpec out = spec;
    for (const std::string& name : drop) {
        if (name == "three_prime") {
            auto it = std::find(out.structural_pre.begin(), out.structural_pre.end(),
                                "three_prime");
            if (it == out.structural_pre.end())
                throw std::invalid_argument("spec " + spec.id +
                                            " has no three_prime hypothesis");
            out.structural_pre.erase(it);
        } else if (name == "nonzero") {
            if (out.scope != Scope::PerDerivation || !out.require_nonzero_derivation)
                throw std::invalid_argument("spec " + spec.id +
                                            " has no nonzero-derivation hypothesis");
            out.require_nonzero_derivation = false;
        } else {
            throw std::invalid_argument("unknown hypothesis " + name +
                                        " (known: three_prime, nonzero)");
        }
    }
    return out;
}

std::vector<Verdict> hunt_counterexamples(const std::vector<NearRing>& candidates,
                                          const TheoremSpec& weakened, int max_witnesses,
                                          const CheckOptions& opts) {
    std::vector<Verdict> found;
    for (const NearRing& n : candidates) {
        if (static_cast<int>(found.size()) >= max_witnesses) break;
        for (Verdict& v : check_theorem(n, weakened, opts)) {
            if (v.status != Status::Refuted) continue;
            found.push_back(std::move(v));
            if (static_cast<int>(found.size()) >= max_witnesses) break;
        }
    }
    return found;
}

} // namespace nrlab
