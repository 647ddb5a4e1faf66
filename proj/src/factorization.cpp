#include "mfkit/factorization.hpp"

#include <array>
#include <deque>
#include <unordered_set>

namespace mfkit {

namespace {

std::string entry_text(const Polynomial& p) {
    return p.to_string(positional_variable_names(p.variable_count()));
}

void require_verified(const Factorization& fac, const char* op) {
    if (!fac.is_verified())
        throw std::invalid_argument(std::string(op) + ": input factorization must be verified");
}

}  // namespace

Factorization::Factorization(Polynomial target, std::vector<PolyMatrix> factors)
    : target_(std::move(target)), factors_(std::move(factors)) {
    if (factors_.empty())
        throw std::invalid_argument("a factorization needs at least one factor");
    for (const PolyMatrix& f : factors_) {
        if (f.size() != factors_.front().size())
            throw std::invalid_argument("all factors must have the same size");
        if (f.variable_count() != target_.variable_count())
            throw std::invalid_argument("factors and target must share one variable count");
    }
}

const Polynomial& Factorization::verify() {
    PolyMatrix product = factors_.front();
    for (std::size_t i = 1; i < factors_.size(); ++i) product = product * factors_[i];

    std::optional<Polynomial> scalar = product.scalar_identity();
    if (!scalar) {
        // Locate the first entry breaking the scalar-identity shape.
        const Polynomial& pivot = product.at(0, 0);
        for (int i = 0; i < product.size(); ++i) {
            for (int j = 0; j < product.size(); ++j) {
                const bool broken = (i == j) ? !(product.at(i, i) == pivot)
                                             : !product.at(i, j).is_zero();
                if (broken)
                    throw VerifyError(VerifyError::Kind::NotScalarIdentity, i, j,
                                      "product is not a scalar identity: entry (" +
                                          std::to_string(i) + "," + std::to_string(j) +
                                          ") = " + entry_text(product.at(i, j)));
            }
        }
        throw VerifyError(VerifyError::Kind::NotScalarIdentity, -1, -1,
                          "product is not a scalar identity");
    }
    if (!(*scalar == target_))
        throw VerifyError(VerifyError::Kind::ScalarMismatch, -1, -1,
                          "product equals g*I with g = " + entry_text(*scalar) +
                              ", expected target " + entry_text(target_));
    verified_ = true;
    return target_;
}

Polynomial TermList::sum() const {
    if (pairs.empty()) throw std::invalid_argument("term list must not be empty");
    Polynomial total(pairs.front().first.variable_count());
    for (const auto& [g, h] : pairs) total += g * h;
    return total;
}

namespace {

// One induction step of the standard method.
std::pair<PolyMatrix, PolyMatrix> border_step(const PolyMatrix& c, const PolyMatrix& d,
                                              const Polynomial& g, const Polynomial& h) {
    const int n = c.size();
    PolyMatrix gi = PolyMatrix::scalar(g, n);
    PolyMatrix hi = PolyMatrix::scalar(h, n);
    PolyMatrix p = assemble({n, c, -gi, hi, d});
    PolyMatrix q = assemble({n, d, gi, -hi, c});
    return {std::move(p), std::move(q)};
}

}  // namespace

Factorization standard_method(const TermList& terms) {
    if (terms.pairs.empty())
        throw std::invalid_argument("standard_method: term list must not be empty");
    const std::size_t vars = terms.pairs.front().first.variable_count();
    for (const auto& [g, h] : terms.pairs)
        if (g.variable_count() != vars || h.variable_count() != vars)
            throw std::invalid_argument("standard_method: variable count mismatch in term list");

    PolyMatrix c = PolyMatrix::scalar(terms.pairs.front().first, 1);
    PolyMatrix d = PolyMatrix::scalar(terms.pairs.front().second, 1);
    for (std::size_t k = 1; k < terms.pairs.size(); ++k) {
        auto [p, q] = border_step(c, d, terms.pairs[k].first, terms.pairs[k].second);
        c = std::move(p);
        d = std::move(q);
    }
    Factorization fac(terms.sum(), {std::move(c), std::move(d)});
    fac.verify();
    return fac;
}

Factorization combine_prop21(const Factorization& f1, const Factorization& f2) {
    require_verified(f1, "combine_prop21");
    require_verified(f2, "combine_prop21");
    if (f1.factor_count() != 2 || f2.factor_count() != 2)
        throw std::invalid_argument("combine_prop21: both inputs must be 2-factor");
    if (f1.size() != f2.size())
        throw std::invalid_argument("combine_prop21: size mismatch");
    const PolyMatrix& c1 = f1.factors()[0];
    const PolyMatrix& d1 = f1.factors()[1];
    const PolyMatrix& c2 = f2.factors()[0];
    const PolyMatrix& d2 = f2.factors()[1];

    // The construction needs C1 D2 = D2 C1 and C2 D1 = D1 C2.
    PolyMatrix lhs = c1 * d2;
    PolyMatrix rhs = d2 * c1;
    if (!(lhs == rhs))
        throw CommutationError(1, 2, lhs - rhs, "combine_prop21: C1 and D2 do not commute");
    lhs = c2 * d1;
    rhs = d1 * c2;
    if (!(lhs == rhs))
        throw CommutationError(2, 1, lhs - rhs, "combine_prop21: C2 and D1 do not commute");

    const int n = f1.size();
    PolyMatrix p = assemble({n, c1, -d2, c2, d1});
    PolyMatrix q = assemble({n, d1, d2, -c2, c1});
    Factorization fac(f1.target() + f2.target(), {std::move(p), std::move(q)});
    fac.verify();
    return fac;
}

Factorization extend_cor21(const Factorization& fac, const Polynomial& g,
                           const Polynomial& h) {
    require_verified(fac, "extend_cor21");
    if (fac.factor_count() != 2)
        throw std::invalid_argument("extend_cor21: input must be 2-factor");
    if (g.variable_count() != fac.variable_count() ||
        h.variable_count() != fac.variable_count())
        throw std::invalid_argument("extend_cor21: variable count mismatch");
    auto [p, q] = border_step(fac.factors()[0], fac.factors()[1], g, h);
    Factorization out(fac.target() + g * h, {std::move(p), std::move(q)});
    out.verify();
    return out;
}

std::vector<Factorization> cyclic_rotations(const Factorization& fac) {
    require_verified(fac, "cyclic_rotations");
    const int n = fac.factor_count();
    std::vector<Factorization> out;
    out.reserve(n);
    for (int start = 0; start < n; ++start) {
        std::vector<PolyMatrix> rotated;
        rotated.reserve(n);
        for (int k = 0; k < n; ++k)
            rotated.push_back(fac.factors()[(start + k) % n]);
        Factorization rot(fac.target(), std::move(rotated));
        rot.verify();
        out.push_back(std::move(rot));
    }
    return out;
}

Factorization transpose_reversal(const Factorization& fac) {
    require_verified(fac, "transpose_reversal");
    std::vector<PolyMatrix> reversed;
    reversed.reserve(fac.factors().size());
    for (auto it = fac.factors().rbegin(); it != fac.factors().rend(); ++it)
        reversed.push_back(it->transposed());
    Factorization out(fac.target(), std::move(reversed));
    out.verify();
    return out;
}

DetCertificate det_certificate(const Factorization& fac, bool irreducible_hint,
                               int det_cap) {
    require_verified(fac, "det_certificate");
    const int m = fac.size();
    const Polynomial& f = fac.target();
    DetCertificate cert{f.pow(static_cast<std::uint32_t>(m)), {}};
    Polynomial det_product = Polynomial::constant(f.variable_count(), 1);

    for (int i = 0; i < fac.factor_count(); ++i) {
        FactorCertificate entry{fac.factors()[i].determinant(det_cap),
                                Polynomial(f.variable_count()), std::nullopt, std::nullopt};
        if (entry.determinant.is_zero())
            throw CertificateError("factor " + std::to_string(i + 1) +
                                   " has zero determinant and cannot be invertible");
        std::optional<Polynomial> quotient = cert.target_power.try_divide(entry.determinant);
        if (!quotient)
            throw CertificateError("determinant of factor " + std::to_string(i + 1) +
                                   " does not divide target^m; the factorization is broken");
        entry.quotient = std::move(*quotient);

        if (irreducible_hint) {
            // Peel copies of the target off the determinant until a unit is left.
            Polynomial rest = entry.determinant;
            std::uint32_t k = 0;
            while (!rest.is_constant()) {
                std::optional<Polynomial> next = rest.try_divide(f);
                if (!next || k >= static_cast<std::uint32_t>(m))
                    throw CertificateError("determinant of factor " + std::to_string(i + 1) +
                                           " is not a unit multiple of a target power");
                rest = std::move(*next);
                ++k;
            }
            entry.power = k;
            entry.unit = rest.constant_value();
        }
        det_product *= entry.determinant;
        cert.factors.push_back(std::move(entry));
    }
    if (!(det_product == cert.target_power))
        throw CertificateError("determinants do not multiply to target^m; arithmetic bug");
    return cert;
}

namespace {

bool eq(const PolyMatrix& a, const PolyMatrix& b) { return a == b; }

}  // namespace

Thm32HypothesisResult thm32_hypothesis(const BlockQuad& a, const BlockQuad& b) {
    if (a.half != b.half)
        throw std::invalid_argument("thm32_hypothesis: half sizes must match");

    BlockCommuteResult comm = blocks_commute(a);
    if (!comm.ok)
        return {std::nullopt, "blocks A" + std::to_string(comm.lhs) + " and A" +
                                  std::to_string(comm.rhs) + " do not commute"};

    // Variant A: A2 = B2, A3 = B3, A1 = -B4, A4 = -B1.
    std::string why_a;
    if (!eq(a.b2, b.b2)) why_a = "A2 != B2";
    else if (!eq(a.b3, b.b3)) why_a = "A3 != B3";
    else if (!eq(a.b1, -b.b4)) why_a = "A1 != -B4";
    else if (!eq(a.b4, -b.b1)) why_a = "A4 != -B1";
    if (why_a.empty())
        return {Hypothesis32{Thm32Variant::A, "A2=B2, A3=B3, A1=-B4, A4=-B1"}, ""};

    // Variant B: A1 = B4, A4 = B1, A2 = -B2, A3 = -B3.
    std::string why_b;
    if (!eq(a.b1, b.b4)) why_b = "A1 != B4";
    else if (!eq(a.b4, b.b1)) why_b = "A4 != B1";
    else if (!eq(a.b2, -b.b2)) why_b = "A2 != -B2";
    else if (!eq(a.b3, -b.b3)) why_b = "A3 != -B3";
    if (why_b.empty())
        return {Hypothesis32{Thm32Variant::B, "A1=B4, A4=B1, A2=-B2, A3=-B3"}, ""};

    return {std::nullopt, "variant A fails (" + why_a + "), variant B fails (" + why_b + ")"};
}

namespace {

struct BlockPick {
    bool from_b;
    std::array<int, 4> idx;
};

struct BlockPattern {
    BlockPick lhs, rhs;
};

// The 14 block rearrangements, in their catalog order.
constexpr std::array<BlockPattern, 14> kBlockPatterns{{
    {{false, {1, 2, 3, 4}}, {true, {1, 2, 3, 4}}},   // 1
    {{false, {3, 1, 4, 2}}, {true, {2, 4, 1, 3}}},   // 2
    {{false, {4, 3, 2, 1}}, {true, {4, 3, 2, 1}}},   // 3
    {{false, {2, 4, 1, 3}}, {true, {3, 1, 4, 2}}},   // 4
    {{false, {2, 1, 4, 3}}, {true, {3, 4, 1, 2}}},   // 5
    {{false, {3, 4, 1, 2}}, {true, {2, 1, 4, 3}}},   // 6
    {{true, {1, 3, 2, 4}}, {false, {1, 3, 2, 4}}},   // 7
    {{true, {2, 1, 4, 3}}, {false, {3, 4, 1, 2}}},   // 8
    {{true, {4, 2, 3, 1}}, {false, {4, 2, 3, 1}}},   // 9
    {{true, {3, 4, 1, 2}}, {false, {2, 1, 4, 3}}},   // 10
    {{true, {3, 1, 4, 2}}, {false, {2, 4, 1, 3}}},   // 11
    {{true, {2, 4, 1, 3}}, {false, {3, 1, 4, 2}}},   // 12
    {{false, {1, 3, 2, 4}}, {true, {1, 3, 2, 4}}},   // 13
    {{false, {4, 2, 3, 1}}, {true, {4, 2, 3, 1}}},   // 14
}};

PolyMatrix pick_blocks(const BlockQuad& a, const BlockQuad& b, const BlockPick& pick) {
    const BlockQuad& src = pick.from_b ? b : a;
    return assemble({src.half, src.block(pick.idx[0]), src.block(pick.idx[1]),
                     src.block(pick.idx[2]), src.block(pick.idx[3])});
}

}  // namespace

std::vector<Factorization> thm32_generate(const BlockQuad& a, const BlockQuad& b) {
    Thm32HypothesisResult hyp = thm32_hypothesis(a, b);
    if (!hyp.match)
        throw std::invalid_argument("thm32_generate: hypothesis not satisfied: " + hyp.failure);

    // The seed pair must itself be a factorization; extract its target.
    PolyMatrix product = assemble(a) * assemble(b);
    std::optional<Polynomial> target = product.scalar_identity();
    if (!target)
        throw VerifyError(VerifyError::Kind::NotScalarIdentity, -1, -1,
                          "thm32_generate: the input pair is not a matrix factorization");

    std::vector<Factorization> out;
    out.reserve(kBlockPatterns.size());
    for (const BlockPattern& pattern : kBlockPatterns) {
        Factorization fac(*target,
                          {pick_blocks(a, b, pattern.lhs), pick_blocks(a, b, pattern.rhs)});
        fac.verify();  // a failure here means the pattern table is mistranscribed
        out.push_back(std::move(fac));
    }
    return out;
}

std::string canonical_key(const Factorization& fac) {
    const std::vector<std::string> names = positional_variable_names(fac.variable_count());
    std::string key = std::to_string(fac.factor_count()) + "|" + std::to_string(fac.size());
    for (const PolyMatrix& factor : fac.factors()) {
        key += "|";
        for (int i = 0; i < factor.size(); ++i) {
            for (int j = 0; j < factor.size(); ++j) {
                key += factor.at(i, j).to_string(names);
                key += j + 1 < factor.size() ? "," : ";";
            }
        }
    }
    return key;
}

OrbitResult orbit(const Factorization& seed, const OrbitOptions& options) {
    require_verified(seed, "orbit");
    OrbitResult result{{}, true};
    std::unordered_set<std::string> seen;
    std::deque<std::pair<std::size_t, int>> pending;  // member index, depth

    auto try_add = [&](Factorization fac, int depth) {
        std::string key = canonical_key(fac);
        if (seen.contains(key)) return;
        if (result.members.size() >= options.set_cap) {
            result.complete = false;
            return;
        }
        seen.insert(std::move(key));
        result.members.push_back(std::move(fac));
        pending.emplace_back(result.members.size() - 1, depth);
    };

    try_add(seed, 0);
    while (!pending.empty()) {
        auto [index, depth] = pending.front();
        pending.pop_front();
        if (depth >= options.depth_cap) {
            result.complete = false;
            continue;
        }
        // Copy: expanding may grow the member vector and invalidate references.
        Factorization current = result.members[index];
        for (Factorization& rot : cyclic_rotations(current))
            try_add(std::move(rot), depth + 1);
        try_add(transpose_reversal(current), depth + 1);
        if (current.factor_count() == 2 && current.size() % 2 == 0) {
            BlockQuad qa = partition(current.factors()[0]);
            BlockQuad qb = partition(current.factors()[1]);
            if (thm32_hypothesis(qa, qb).match)
                for (Factorization& gen : thm32_generate(qa, qb))
                    try_add(std::move(gen), depth + 1);
        }
    }
    return result;
}

}  // namespace mfkit
