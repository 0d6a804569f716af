#pragma once

// Bound calculators and brute-force complexity oracles.  All query bounds
// here are asymptotic with hidden constants set to 1 and logs base 2; the
// toolkit never claims exact query counts.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rmf/circuit.hpp"
#include "rmf/evaluate.hpp"
#include "rmf/metrics.hpp"
#include "rmf/prune.hpp"

namespace rmf {

enum class ActiveTerm { N, SqrtS, NG };
enum class Regime { NLimited, SizeLimited, GateLimited };

inline const char* active_term_name(ActiveTerm t) {
    switch (t) {
    case ActiveTerm::N: return "n";
    case ActiveTerm::SqrtS: return "sqrt(S)";
    case ActiveTerm::NG: return "n^(1/2)*G^(1/4)";
    }
    return "?";
}

inline const char* regime_name(Regime r) {
    switch (r) {
    case Regime::NLimited: return "n-limited";
    case Regime::SizeLimited: return "size-limited";
    case Regime::GateLimited: return "gate-limited";
    }
    return "?";
}

struct BoundReport {
    std::size_t n = 0;
    BigCount S = 0;
    std::size_t G = 0;
    double term_n = 0, term_sqrt_s = 0, term_n_g = 0;
    double upper = 0;
    ActiveTerm active_term = ActiveTerm::N;
    Regime regime = Regime::NLimited;
};

/// Evaluation upper bound min{n, sqrt(S), n^(1/2) G^(1/4)} with the regime
/// classification of the matching hard-instance construction.  Regime tests
/// are exact integer comparisons (S <= n*sqrt(G) checked as S^2 <= n^2*G).
inline BoundReport upper_bound(const Metrics& m) {
    BoundReport r;
    r.n = m.n;
    r.S = m.S;
    r.G = m.G;
    r.term_n = static_cast<double>(m.n);
    r.term_sqrt_s = std::sqrt(m.S.convert_to<double>());
    r.term_n_g = std::sqrt(static_cast<double>(m.n)) *
                 std::pow(static_cast<double>(m.G), 0.25);
    r.upper = std::min({r.term_n, r.term_sqrt_s, r.term_n_g});
    if (r.upper == r.term_n)
        r.active_term = ActiveTerm::N;
    else if (r.upper == r.term_sqrt_s)
        r.active_term = ActiveTerm::SqrtS;
    else
        r.active_term = ActiveTerm::NG;

    const BigCount n2 = BigCount(m.n) * m.n;
    const BigCount s2 = m.S * m.S;
    const BigCount n2g = n2 * m.G;
    if (m.S >= n2 && BigCount(m.G) >= n2)
        r.regime = Regime::NLimited;
    else if (s2 <= n2g && m.S <= n2)
        r.regime = Regime::SizeLimited;
    else
        r.regime = Regime::GateLimited;
    return r;
}

/// Gate count needed by any formula for a function with query complexity Q
/// on n inputs: Q^4/n^2, constants suppressed.
inline double gate_lower_bound(std::uint64_t n, double Q) {
    if (Q > static_cast<double>(n))
        throw Error(Errc::QExceedsN, "query complexity cannot exceed the input count");
    const double nn = static_cast<double>(n);
    return (Q * Q * Q * Q) / (nn * nn);
}

struct CertificateWitness {
    std::string input;                    // bits in declared input order
    std::vector<std::string> certificate; // variables revealed
};

struct CertificateReport {
    std::size_t c0 = 0, c1 = 0;
    bool has_zero_input = false, has_one_input = false;
    CertificateWitness witness0, witness1;
};

namespace detail {

// Truth table over all 2^n assignments, bit i of the mask = declared input i.
inline std::vector<std::uint8_t> truth_table(const Circuit& c) {
    const std::size_t n = c.inputs.size();
    const auto topo = topological_order(c);
    std::vector<std::size_t> input_pos(c.nodes.size(), 0);
    for (NodeId id : topo)
        if (c.nodes[id].kind == GateKind::Input)
            input_pos[id] = c.input_index(c.nodes[id].var);

    std::vector<std::uint8_t> tt(std::size_t(1) << n, 0);
    std::vector<std::uint8_t> val(c.nodes.size(), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        for (NodeId id : topo) {
            const Gate& g = c.nodes[id];
            switch (g.kind) {
            case GateKind::Input: val[id] = (mask >> input_pos[id]) & 1; break;
            case GateKind::Const0: val[id] = 0; break;
            case GateKind::Const1: val[id] = 1; break;
            case GateKind::Not: val[id] = !val[g.children[0]]; break;
            case GateKind::And: {
                std::uint8_t v = 1;
                for (NodeId ch : g.children) v &= val[ch];
                val[id] = v;
                break;
            }
            case GateKind::Or: {
                std::uint8_t v = 0;
                for (NodeId ch : g.children) v |= val[ch];
                val[id] = v;
                break;
            }
            }
        }
        tt[mask] = val[c.output];
    }
    return tt;
}

// True when fixing the bits of `mask` selected by `cert` forces the function
// to `target` on every completion of the free bits.
inline bool forces(const std::vector<std::uint8_t>& tt, std::size_t n, std::uint64_t mask,
                   std::uint64_t cert, std::uint8_t target) {
    std::vector<std::size_t> free_bits;
    for (std::size_t i = 0; i < n; ++i)
        if (!((cert >> i) & 1)) free_bits.push_back(i);
    const std::uint64_t base = mask & cert;
    for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << free_bits.size()); ++sub) {
        std::uint64_t y = base;
        for (std::size_t i = 0; i < free_bits.size(); ++i)
            if ((sub >> i) & 1) y |= std::uint64_t(1) << free_bits[i];
        if (tt[y] != target) return false;
    }
    return true;
}

// Next bitmask with the same popcount (Gosper's hack).
inline std::uint64_t next_same_popcount(std::uint64_t v) {
    std::uint64_t c = v & -v;
    std::uint64_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

} // namespace detail

/// Exact certificate complexity by exhaustive search: for every input, the
/// smallest set of revealed variables forcing the output, maximized per
/// output polarity.  Pre: at most 25 inputs; meant for tiny instances.
inline CertificateReport certificate_complexity(const Circuit& c) {
    const std::size_t n = c.inputs.size();
    if (n > 25)
        throw Error(Errc::TooLarge, "certificate oracle caps at 25 inputs");
    require_valid(c);

    const auto tt = detail::truth_table(c);
    CertificateReport rep;

    auto bits_of = [&](std::uint64_t mask) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) s[i] = '1';
        return s;
    };
    auto vars_of = [&](std::uint64_t cert) {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < n; ++i)
            if ((cert >> i) & 1) v.push_back(c.inputs[i]);
        return v;
    };

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        const std::uint8_t b = tt[mask];
        std::size_t& best = b ? rep.c1 : rep.c0;
        bool& seen = b ? rep.has_one_input : rep.has_zero_input;
        // minimal certificate for this input
        std::uint64_t found_cert = 0;
        std::size_t found = n + 1;
        for (std::size_t s = 0; s <= n && found > n; ++s) {
            if (s == 0) {
                if (detail::forces(tt, n, mask, 0, b)) {
                    found = 0;
                    found_cert = 0;
                }
                continue;
            }
            std::uint64_t cert = (std::uint64_t(1) << s) - 1;
            const std::uint64_t limit = std::uint64_t(1) << n;
            while (cert < limit) {
                if (detail::forces(tt, n, mask, cert, b)) {
                    found = s;
                    found_cert = cert;
                    break;
                }
                cert = detail::next_same_popcount(cert);
            }
        }
        if (!seen || found > best) {
            best = found;
            seen = true;
            auto& w = b ? rep.witness1 : rep.witness0;
            w.input = bits_of(mask);
            w.certificate = vars_of(found_cert);
        }
    }
    return rep;
}

struct AuditResult {
    bool pass = true;
    std::string detail; // violated inequality, when failing
};

namespace detail {

inline std::uint64_t round_charge_bound(double alpha, std::size_t n, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        std::ceil(alpha * std::sqrt(static_cast<double>(n) / static_cast<double>(m))));
}

inline AuditResult audit_pass(const PassReport& p, const char* label, const Metrics& m,
                              const SearchConfig& cfg, std::uint64_t tau) {
    auto fail = [&](const std::string& what) {
        return AuditResult{false, std::string(label) + " pass: " + what};
    };
    for (std::size_t j = 1; j < p.m_sequence.size(); ++j)
        if (!(p.m_sequence[j - 1] > p.m_sequence[j]))
            return fail("m_" + std::to_string(j) + " >= m_" + std::to_string(j + 1) +
                        " violates the strict decrease m_j > m_{j+1}");
    for (std::uint64_t mj : p.m_sequence)
        if (mj == 0)
            return fail("a successful round reported zero marked items");
    if (p.rounds > tau + 1)
        return fail("rounds " + std::to_string(p.rounds) + " exceed ceil(sqrt(G))+1 = " +
                    std::to_string(tau + 1));

    // Chain sum(sqrt(n/m_j)) <= 2*sqrt(n*k), k counting the final stuck round.
    double chain = 0;
    for (std::uint64_t mj : p.m_sequence)
        chain += std::sqrt(static_cast<double>(m.n) / static_cast<double>(mj));
    const double k = static_cast<double>(p.m_sequence.size() + 1);
    if (chain > 2.0 * std::sqrt(static_cast<double>(m.n) * k) + 1e-9)
        return fail("sum sqrt(n/m_j) exceeds 2*sqrt(n*k)");

    std::uint64_t bound = 0;
    for (std::uint64_t mj : p.m_sequence)
        bound += round_charge_bound(cfg.alpha, m.n, mj);
    if (p.exhausted)
        bound += static_cast<std::uint64_t>(
            std::ceil(cfg.budget_factor * cfg.alpha * std::sqrt(static_cast<double>(m.n))));
    if (p.charged > bound)
        return fail("charged " + std::to_string(p.charged) + " exceeds the recomputed bound " +
                    std::to_string(bound));
    return {};
}

} // namespace detail

/// Recomputes the search cost chain from the report's own m-sequences and
/// checks the ledger against it; failures name the broken inequality.
inline AuditResult ledger_audit(const PruneReport& rep, const Metrics& m, const SearchConfig& cfg) {
    std::uint64_t total = 0;
    for (const auto& e : rep.ledger.log)
        total += e.cost;
    if (total != rep.ledger.charged)
        return {false, "ledger charged count disagrees with the sum of its log entries"};
    if (rep.or_pass.charged + rep.and_pass.charged != rep.ledger.charged)
        return {false, "pass charges do not add up to the ledger total"};

    AuditResult r = detail::audit_pass(rep.or_pass, "or", m, cfg, rep.tau);
    if (!r.pass) return r;
    r = detail::audit_pass(rep.and_pass, "and", m, cfg, rep.tau);
    if (!r.pass) return r;
    return {};
}

} // namespace rmf
