#pragma once

// Hard-instance generators.  Each returns an InstanceRecord bundling the
// circuit with provenance, the asymptotic query lower bound for its family
// (constants suppressed, logs base 2), and the instance metrics.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rmf/circuit.hpp"
#include "rmf/metrics.hpp"
#include "rmf/projective_plane.hpp"
#include "rmf/transform.hpp"

namespace rmf {

enum class Family { Parity, ParityAnd, Onto, OntoIter, Ed, EdAnd, Bvpv, Bmpv, ProjPlane };

inline const char* family_name(Family f) {
    switch (f) {
    case Family::Parity: return "PARITY";
    case Family::ParityAnd: return "PARITY_AND";
    case Family::Onto: return "ONTO";
    case Family::OntoIter: return "ONTO_ITER";
    case Family::Ed: return "ED";
    case Family::EdAnd: return "ED_AND";
    case Family::Bvpv: return "BVPV";
    case Family::Bmpv: return "BMPV";
    case Family::ProjPlane: return "PROJ_PLANE";
    }
    return "?";
}

struct InstanceRecord {
    Circuit circuit;
    Family family = Family::Parity;
    std::map<std::string, std::int64_t> params;
    std::string citation;
    std::string lb_formula; // asymptotic, constants suppressed, logs base 2
    double lb_value = 0.0;
    Metrics metrics;
};

namespace detail {

inline bool is_pow2(std::uint64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

inline std::uint64_t log2_exact(std::uint64_t n) {
    std::uint64_t k = 0;
    while ((std::uint64_t(1) << k) < n) ++k;
    return k;
}

inline InstanceRecord finish(Circuit c, Family fam, std::map<std::string, std::int64_t> params,
                             std::string citation, std::string lb_formula, double lb_value) {
    InstanceRecord r;
    r.circuit = std::move(c);
    require_valid(r.circuit);
    r.family = fam;
    r.params = std::move(params);
    r.citation = std::move(citation);
    r.lb_formula = std::move(lb_formula);
    r.lb_value = lb_value;
    r.metrics = metrics(r.circuit);
    return r;
}

// Builds the size-n^2 parity formula over vars[lo..lo+len) by the recursive
// (F, notF) doubling; `want_pos` selects which member to emit so nothing
// unreachable is left behind.  Every subtree is replicated, never shared.
struct ParityBuilder {
    CircuitBuilder& b;
    const std::vector<NodeId>& leaves;

    struct Pair {
        NodeId pos, neg;
    };

    Pair both(std::size_t lo, std::size_t len) {
        if (len == 1)
            return {leaves[lo], b.not_(leaves[lo])};
        const std::size_t half = len / 2;
        Pair a1 = both(lo, half), b1 = both(lo + half, half);
        NodeId pos = b.or_({b.and_({a1.pos, b1.neg}), b.and_({a1.neg, b1.pos})});
        Pair a2 = both(lo, half), b2 = both(lo + half, half);
        NodeId neg = b.or_({b.and_({a2.pos, b2.pos}), b.and_({a2.neg, b2.neg})});
        return {pos, neg};
    }

    NodeId positive(std::size_t lo, std::size_t len) {
        if (len == 1)
            return leaves[lo];
        const std::size_t half = len / 2;
        Pair a = both(lo, half), g = both(lo + half, half);
        return b.or_({b.and_({a.pos, g.neg}), b.and_({a.neg, g.pos})});
    }
};

} // namespace detail

/// PARITY_n as a formula of size exactly n^2 with n^2-1 gates; NOT gates
/// appear at the leaves only.
inline InstanceRecord gen_parity(std::uint64_t n) {
    if (!detail::is_pow2(n) || n < 2)
        throw Error(Errc::NotPowerOfTwo, "parity wants n = 2^k, k >= 1");
    CircuitBuilder b("parity" + std::to_string(n));
    std::vector<NodeId> leaves;
    for (std::uint64_t i = 0; i < n; ++i)
        leaves.push_back(b.input("x" + std::to_string(i)));
    detail::ParityBuilder pb{b, leaves};
    b.set_output(pb.positive(0, n));
    return detail::finish(b.build(), Family::Parity, {{"n", std::int64_t(n)}},
                          "parity needs Omega(n) quantum queries (Beals et al. 2001; "
                          "Farhi et al. 1998); formula size Omega(n^2) is Khrapchenko's bound",
                          "n", static_cast<double>(n));
}

/// Single unbounded-fanin AND (or OR) over k fresh variables.
inline Circuit gen_single_gate(GateKind kind, std::uint64_t k, const std::string& name) {
    CircuitBuilder b(name);
    std::vector<NodeId> ch;
    for (std::uint64_t i = 0; i < k; ++i)
        ch.push_back(b.input("x" + std::to_string(i)));
    b.set_output(b.gate(kind, std::move(ch)));
    return b.build();
}

/// PARITY_m composed with AND_{n/m} blocks: size Theta(nm), gate count
/// Theta(m^2), query bound Omega(sqrt(nm)).
inline InstanceRecord gen_parity_and(std::uint64_t n, std::uint64_t m) {
    if (m < 2 || !detail::is_pow2(m))
        throw Error(Errc::BadDivisibility, "parity arity m must be a power of two, m >= 2");
    if (n % m != 0 || n / m < 1)
        throw Error(Errc::BadDivisibility, "m must divide n");
    InstanceRecord parity = gen_parity(m);
    Circuit blocks = gen_single_gate(GateKind::And, n / m, "and" + std::to_string(n / m));
    ComposeResult comp = compose(parity.circuit, blocks);
    comp.circuit.name = "parity_and_" + std::to_string(n) + "_" + std::to_string(m);
    return detail::finish(std::move(comp.circuit), Family::ParityAnd,
                          {{"m", std::int64_t(m)}, {"n", std::int64_t(n)}},
                          "parity composed with AND blocks; composed query complexity "
                          "multiplies per the adversary composition theorem (Reichardt 2011)",
                          "sqrt(n*m)", std::sqrt(static_cast<double>(n) * static_cast<double>(m)));
}

enum class InstanceRegime { NLimited, SizeLimited, GateLimited };

inline const char* regime_name(InstanceRegime r) {
    switch (r) {
    case InstanceRegime::NLimited: return "n-limited";
    case InstanceRegime::SizeLimited: return "size-limited";
    case InstanceRegime::GateLimited: return "gate-limited";
    }
    return "?";
}

/// Named presets for the three hard-instance regimes: full parity on a
/// constant fraction of the inputs when both budgets allow n^2, otherwise
/// parity-of-AND-blocks with m = S/n (size-limited) or m = sqrt(G)
/// (gate-limited), rounded down to admissible powers of two.
inline InstanceRecord gen_regime_preset(InstanceRegime regime, std::uint64_t n, std::uint64_t S,
                                          std::uint64_t G, double fraction = 0.5) {
    if (!detail::is_pow2(n) || n < 4)
        throw Error(Errc::BadParams, "presets want n a power of two, n >= 4");
    auto pow2_at_most = [](double x) -> std::uint64_t {
        std::uint64_t m = 1;
        while (double(m) * 2.0 <= x) m *= 2;
        return m;
    };
    switch (regime) {
    case InstanceRegime::NLimited: {
        std::uint64_t m = pow2_at_most(fraction * static_cast<double>(n));
        while (m >= 2 && (double(m) * double(m) > double(S) || double(m) * double(m) - 1 > double(G)))
            m /= 2;
        if (m < 2)
            throw Error(Errc::BadParams, "S and G budgets too small for a parity instance");
        // Parity of the first m inputs out of n declared.
        CircuitBuilder b("parity_frac_" + std::to_string(n) + "_" + std::to_string(m));
        std::vector<NodeId> leaves;
        for (std::uint64_t i = 0; i < n; ++i)
            leaves.push_back(b.input("x" + std::to_string(i)));
        detail::ParityBuilder pb{b, leaves};
        b.set_output(pb.positive(0, m));
        return detail::finish(b.build(), Family::Parity,
                              {{"m", std::int64_t(m)}, {"n", std::int64_t(n)}},
                              "parity restricted to a constant fraction of the inputs",
                              "m", static_cast<double>(m));
    }
    case InstanceRegime::SizeLimited: {
        std::uint64_t m = pow2_at_most(static_cast<double>(S) / static_cast<double>(n));
        m = std::min(m, n);
        if (m < 2)
            throw Error(Errc::BadParams, "size budget below the smallest parity block");
        return gen_parity_and(n, m);
    }
    case InstanceRegime::GateLimited: {
        std::uint64_t m = pow2_at_most(std::sqrt(static_cast<double>(G)));
        m = std::min(m, n);
        if (m < 2)
            throw Error(Errc::BadParams, "gate budget below the smallest parity block");
        return gen_parity_and(n, m);
    }
    }
    throw Error(Errc::BadParams, "unknown regime");
}

namespace detail {

// Literal asserting that variable `v` carries bit b: v itself or NOT v.
inline NodeId bit_literal(CircuitBuilder& b, NodeId v, bool bit) {
    return bit ? v : b.not_(v);
}

} // namespace detail

/// ONTO over functions [2n-2] -> [n], n a power of two, encoded in
/// N = (2n-2)*log2(n) bits: the depth-3 formula
/// AND_j OR_i AND_l f(i)_l^{j_l}.
inline InstanceRecord gen_onto(std::uint64_t n) {
    if (!detail::is_pow2(n) || n < 2)
        throw Error(Errc::NotPowerOfTwo, "onto wants the range size n to be a power of two, n >= 2");
    const std::uint64_t k = detail::log2_exact(n);
    const std::uint64_t dom = 2 * n - 2;
    CircuitBuilder b("onto" + std::to_string(n));
    // bits[i][l]: bit l of the encoding of f(i), values in [n] stored as v-1
    std::vector<std::vector<NodeId>> bits(dom);
    for (std::uint64_t i = 1; i <= dom; ++i)
        for (std::uint64_t l = 0; l < k; ++l)
            bits[i - 1].push_back(b.input("f" + std::to_string(i) + "_b" + std::to_string(l)));

    std::vector<NodeId> per_j;
    for (std::uint64_t j = 1; j <= n; ++j) {
        std::vector<NodeId> per_i;
        for (std::uint64_t i = 0; i < dom; ++i) {
            std::vector<NodeId> lits;
            for (std::uint64_t l = 0; l < k; ++l)
                lits.push_back(detail::bit_literal(b, bits[i][l], ((j - 1) >> l) & 1));
            per_i.push_back(b.and_(std::move(lits)));
        }
        per_j.push_back(b.or_(std::move(per_i)));
    }
    b.set_output(b.and_(std::move(per_j)));

    const std::uint64_t N = dom * k;
    const double lb = N >= 2 ? static_cast<double>(N) / std::log2(static_cast<double>(N))
                             : static_cast<double>(N);
    return detail::finish(b.build(), Family::Onto,
                          {{"N", std::int64_t(N)}, {"n", std::int64_t(n)}},
                          "ONTO surjectivity function of Beame and Machmouchi (2010), "
                          "query complexity Omega(N/log N)",
                          "N/log2(N)", lb);
}

/// Iterated self-composition of ONTO: each step composes the previous
/// function on m bits with itself on n/m bits, m chosen so that
/// m^(2r-1) = n^r for the current size exponent r (tracked exactly as a
/// rational r_num/r_den in the params).
inline InstanceRecord gen_onto_iter(std::uint64_t n, std::uint64_t iterations) {
    if (!detail::is_pow2(n) || n < 2)
        throw Error(Errc::BadParams, "onto_iter wants a power-of-two range target");
    if (iterations > 3)
        throw Error(Errc::BadParams, "iterations above 3 explode; keep it small");

    auto onto_bits = [](std::uint64_t range) {
        return (2 * range - 2) * detail::log2_exact(range);
    };
    // Nearest admissible ONTO range for a bit target.
    auto nearest_range = [&](double target_bits) {
        std::uint64_t best = 2;
        double best_err = std::abs(double(onto_bits(2)) - target_bits);
        for (std::uint64_t r = 4; r <= (std::uint64_t(1) << 24); r *= 2) {
            double err = std::abs(double(onto_bits(r)) - target_bits);
            if (err < best_err) {
                best = r;
                best_err = err;
            }
            if (double(onto_bits(r)) > target_bits * 4) break;
        }
        return best;
    };

    struct Level {
        Circuit circuit;
        double bits;
    };
    // r = p/q, updated as r' = p^2 / (q(2p - q)).
    std::int64_t r_num = 2, r_den = 1;
    std::function<Level(std::uint64_t, double)> build = [&](std::uint64_t iter,
                                                            double target_bits) -> Level {
        if (iter == 0) {
            std::uint64_t range = nearest_range(target_bits);
            InstanceRecord base = gen_onto(range);
            return {std::move(base.circuit), double(onto_bits(range))};
        }
        // exponent r of the previous level
        std::int64_t p = 2, q = 1;
        for (std::uint64_t i = 1; i < iter; ++i) {
            std::int64_t np = p * p, nq = q * (2 * p - q);
            p = np;
            q = nq;
        }
        const double expnt = double(p) / double(2 * p - q); // r/(2r-1)
        const double m_bits = std::pow(target_bits, expnt);
        Level f = build(iter - 1, m_bits);
        Level g = build(iter - 1, target_bits / std::max(1.0, m_bits));
        ComposeResult comp = compose(f.circuit, g.circuit);
        return {std::move(comp.circuit), double(comp.circuit.inputs.size())};
    };

    const double target = double(onto_bits(n));
    Level top = build(iterations, target);
    for (std::uint64_t i = 0; i < iterations; ++i) {
        std::int64_t np = r_num * r_num, nq = r_den * (2 * r_num - r_den);
        r_num = np;
        r_den = nq;
    }

    if (iterations > 0)
        top.circuit.name = "onto_iter" + std::to_string(n) + "_" + std::to_string(iterations);
    const double bits = double(top.circuit.inputs.size());
    const double polylog = std::pow(std::log2(std::max(2.0, bits)),
                                    static_cast<double>(std::uint64_t(1) << iterations));
    return detail::finish(std::move(top.circuit), Family::OntoIter,
                          {{"iterations", std::int64_t(iterations)},
                           {"n", std::int64_t(n)},
                           {"r_den", r_den},
                           {"r_num", r_num}},
                          "iterated ONTO self-composition; circuit size exponent decays as "
                          "r -> r^2/(2r-1) while the query bound loses only polylog factors",
                          "n/log2(n)^(2^iterations)", bits / polylog);
}

/// Element distinctness over n values from [n], n a power of two, as the
/// depth-2 OR of C(n,2)*n AND clauses asserting x_i = x_j = c.
inline InstanceRecord gen_ed(std::uint64_t n) {
    if (!detail::is_pow2(n) || n < 2)
        throw Error(Errc::NotPowerOfTwo, "ed wants the alphabet size n to be a power of two");
    const std::uint64_t k = detail::log2_exact(n);
    CircuitBuilder b("ed" + std::to_string(n));
    std::vector<std::vector<NodeId>> bits(n);
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t l = 0; l < k; ++l)
            bits[i - 1].push_back(b.input("x" + std::to_string(i) + "_b" + std::to_string(l)));

    std::vector<NodeId> clauses;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = i + 1; j <= n; ++j)
            for (std::uint64_t c = 1; c <= n; ++c) {
                std::vector<NodeId> lits;
                for (std::uint64_t l = 0; l < k; ++l) {
                    bool bit = ((c - 1) >> l) & 1;
                    lits.push_back(detail::bit_literal(b, bits[i - 1][l], bit));
                    lits.push_back(detail::bit_literal(b, bits[j - 1][l], bit));
                }
                clauses.push_back(b.and_(std::move(lits)));
            }
    b.set_output(b.or_(std::move(clauses)));

    const std::uint64_t N = n * k;
    const double ratio = N >= 2 ? double(N) / std::log2(double(N)) : double(N);
    return detail::finish(b.build(), Family::Ed,
                          {{"N", std::int64_t(N)}, {"n", std::int64_t(n)}},
                          "element distinctness, query complexity Theta(n^(2/3)) "
                          "(Aaronson-Shi lower bound, Ambainis walk algorithm)",
                          "(N/log2(N))^(2/3)", std::pow(ratio, 2.0 / 3.0));
}

/// Element distinctness on ~n^(1/3) values composed with AND blocks of
/// ~n^(2/3) bits: a linear-gate-count depth-2 circuit with query bound
/// n^(5/9) up to logs.
inline InstanceRecord gen_ed_and(std::uint64_t n_total) {
    if (!detail::is_pow2(n_total) || n_total < 8)
        throw Error(Errc::BadParams, "ed_and wants a power of two, n >= 8");
    const std::uint64_t t = detail::log2_exact(n_total);
    const std::uint64_t e = (t + 2) / 3;
    const std::uint64_t n_f = std::uint64_t(1) << e;
    const std::uint64_t n_g = n_total / n_f;
    InstanceRecord ed = gen_ed(n_f);
    Circuit blocks = gen_single_gate(GateKind::And, n_g, "and" + std::to_string(n_g));
    ComposeResult comp = compose(ed.circuit, blocks);
    comp.circuit.name = "ed_and" + std::to_string(n_total);
    return detail::finish(std::move(comp.circuit), Family::EdAnd,
                          {{"n", std::int64_t(n_total)},
                           {"n_f", std::int64_t(n_f)},
                           {"n_g", std::int64_t(n_g)}},
                          "element distinctness composed with AND blocks; the 1/3-2/3 split "
                          "keeps the gate count linear",
                          "n^(5/9)", std::pow(double(n_total), 5.0 / 9.0));
}

/// Square bit matrix, row-major.
struct BitMatrix {
    std::size_t n = 0;
    std::vector<std::uint8_t> bits;

    static BitMatrix zero(std::size_t n) { return {n, std::vector<std::uint8_t>(n * n, 0)}; }
    static BitMatrix identity(std::size_t n) {
        BitMatrix m = zero(n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, true);
        return m;
    }
    static BitMatrix ones(std::size_t n) { return {n, std::vector<std::uint8_t>(n * n, 1)}; }

    bool at(std::size_t i, std::size_t j) const { return bits[i * n + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { bits[i * n + j] = v ? 1 : 0; }
};

/// Boolean vector product verification against a fixed A: AND_i OR_j A_ij v_j.
/// All-zero rows of A emit constant-0 children directly.
inline InstanceRecord gen_bvpv(const BitMatrix& A) {
    if (A.n == 0)
        throw Error(Errc::BadParams, "bvpv wants a nonempty matrix");
    CircuitBuilder b("bvpv" + std::to_string(A.n));
    std::vector<NodeId> v;
    for (std::size_t j = 1; j <= A.n; ++j)
        v.push_back(b.input("v" + std::to_string(j)));
    std::vector<NodeId> rows;
    for (std::size_t i = 0; i < A.n; ++i) {
        std::vector<NodeId> hits;
        for (std::size_t j = 0; j < A.n; ++j)
            if (A.at(i, j)) hits.push_back(v[j]);
        rows.push_back(hits.empty() ? b.const0() : b.or_(std::move(hits)));
    }
    b.set_output(b.and_(std::move(rows)));
    return detail::finish(b.build(), Family::Bvpv, {{"n", std::int64_t(A.n)}},
                          "vector product verification against a fixed matrix; some A reaches "
                          "the hardness of linear-size depth-2 circuits",
                          "n^(5/9)", std::pow(double(A.n), 5.0 / 9.0));
}

struct BmpvPair {
    InstanceRecord c_equals_j; // AND of n BVPV_A instances over the entries of B
    InstanceRecord general;    // full AB = C verification formula over 3n^2 inputs
};

/// Boolean matrix product verification instances for a fixed A (variant a)
/// and the general A,B,C formula (variant b, which ignores the entries of A).
inline BmpvPair gen_bmpv(const BitMatrix& A) {
    if (A.n == 0)
        throw Error(Errc::BadParams, "bmpv wants a nonempty matrix");
    const std::size_t n = A.n;
    BmpvPair out;

    {
        CircuitBuilder b("bmpv_cj" + std::to_string(n));
        std::vector<std::vector<NodeId>> B(n, std::vector<NodeId>(n));
        for (std::size_t k = 1; k <= n; ++k)
            for (std::size_t j = 1; j <= n; ++j)
                B[k - 1][j - 1] = b.input("B" + std::to_string(k) + "_" + std::to_string(j));
        std::vector<NodeId> checks;
        for (std::size_t j = 0; j < n; ++j)      // column of B
            for (std::size_t i = 0; i < n; ++i) { // row of A
                std::vector<NodeId> hits;
                for (std::size_t k = 0; k < n; ++k)
                    if (A.at(i, k)) hits.push_back(B[k][j]);
                checks.push_back(hits.empty() ? b.const0() : b.or_(std::move(hits)));
            }
        b.set_output(b.and_(std::move(checks)));
        out.c_equals_j = detail::finish(
            b.build(), Family::Bmpv, {{"n", std::int64_t(n)}, {"variant", 0}},
            "AB = J as an AND of n vector-product checks, one per column of B",
            "sqrt(n)*n^(5/9)", std::sqrt(double(n)) * std::pow(double(n), 5.0 / 9.0));
    }

    {
        CircuitBuilder b("bmpv_general" + std::to_string(n));
        std::vector<std::vector<NodeId>> Av(n, std::vector<NodeId>(n));
        std::vector<std::vector<NodeId>> Bv(n, std::vector<NodeId>(n));
        std::vector<std::vector<NodeId>> Cv(n, std::vector<NodeId>(n));
        auto declare = [&](const char* base, std::vector<std::vector<NodeId>>& m) {
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j)
                    m[i - 1][j - 1] = b.input(base + std::to_string(i) + "_" + std::to_string(j));
        };
        declare("A", Av);
        declare("B", Bv);
        declare("C", Cv);

        // product entry (i,j), built fresh at each use to stay a formula
        auto make_p = [&](std::size_t i, std::size_t j) {
            std::vector<NodeId> terms;
            for (std::size_t k = 0; k < n; ++k)
                terms.push_back(b.and_({Av[i][k], Bv[k][j]}));
            return b.or_(std::move(terms));
        };
        auto make_not_p = [&](std::size_t i, std::size_t j) {
            std::vector<NodeId> terms;
            for (std::size_t k = 0; k < n; ++k)
                terms.push_back(b.or_({b.not_(Av[i][k]), b.not_(Bv[k][j])}));
            return b.and_(std::move(terms));
        };

        std::vector<NodeId> entries;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                NodeId agree1 = b.and_({Cv[i][j], make_p(i, j)});
                NodeId agree0 = b.and_({b.not_(Cv[i][j]), make_not_p(i, j)});
                entries.push_back(b.or_({agree1, agree0}));
            }
        b.set_output(b.and_(std::move(entries)));
        out.general = detail::finish(
            b.build(), Family::Bmpv, {{"n", std::int64_t(n)}, {"variant", 1}},
            "AB = C over the Boolean semiring as a size-O(n^3) formula "
            "(upper bound O(n^(3/2)): Buhrman and Spalek 2006)",
            "n^(19/18)", std::pow(double(n), 19.0 / 18.0));
    }
    return out;
}

/// Depth-2 monotone circuit of a projective plane of prime order q:
/// OR over lines of the AND of their q+1 point variables; q^2+q+1 inputs
/// and q^2+q+2 gates.
inline std::pair<ProjectivePlane, InstanceRecord> gen_projective_plane(std::uint64_t q) {
    ProjectivePlane plane = make_projective_plane(q);
    CircuitBuilder b("projplane" + std::to_string(q));
    std::vector<NodeId> pts;
    for (std::size_t i = 0; i < plane.n; ++i)
        pts.push_back(b.input("p" + std::to_string(i)));
    std::vector<NodeId> lines;
    for (std::size_t l = 0; l < plane.n; ++l) {
        std::vector<NodeId> on;
        for (std::size_t i : plane.incidence[l])
            on.push_back(pts[i]);
        lines.push_back(b.and_(std::move(on)));
    }
    b.set_output(b.or_(std::move(lines)));
    InstanceRecord rec = detail::finish(
        b.build(), Family::ProjPlane,
        {{"n", std::int64_t(plane.n)}, {"q", std::int64_t(q)}},
        "projective-plane candidate for hard linear-size depth-2 circuits; "
        "1-certificate complexity q+1, best known query bound n^(3/8)",
        "n^(3/8)", std::pow(double(plane.n), 3.0 / 8.0));
    return {std::move(plane), std::move(rec)};
}

} // namespace rmf
