#include "qpc/collapse.hpp"

#include <algorithm>

#include "qpc/error.hpp"

namespace qpc {

namespace {

Rat anticanonical_degree(const FanoPolygon& polygon) { return dual(polygon).area2(); }

Int lcm_over(const std::vector<Int>& xs) {
    Int l(1);
    for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_mpz_t());
    return l;
}

}  // namespace

SmoothPart smooth_part(const FanoPolygon& polygon) {
    return smooth_part(polygon, quasi_polynomial(dual(polygon)));
}

SmoothPart smooth_part(const FanoPolygon& polygon, const QuasiPolynomial& qp_of_dual) {
    const Rat k2 = anticanonical_degree(polygon);
    if (k2 != 2 * qp_of_dual.constituents[0][0])
        fail(Errc::leading_coefficient_mismatch,
             "K^2 = " + rat_str(k2) + " but leading coefficient is " +
                 rat_str(qp_of_dual.constituents[0][0]));
    return SmoothPart{k2};
}

CorrectionFunction correction(const FanoPolygon& polygon) {
    const Polygon d = dual(polygon);
    const Int r = d.denominator();
    const long rl = r.get_si();
    const SmoothPart smooth{d.area2()};
    const PointCounter counter(d);

    std::vector<Rat> window(2 * rl);
    for (long k = 0; k < 2 * rl; ++k)
        window[k] = Rat(counter.count(Int(k))) - smooth.evaluate(Int(k));
    if (window[0] != 0) fail(Errc::not_periodic, "c(0) != 0");
    for (long k = 0; k < rl; ++k)
        if (window[k] != window[k + rl])
            fail(Errc::not_periodic, "correction differs at k=" + std::to_string(k) + " and k+r");
    window.resize(rl);
    return CorrectionFunction{r, std::move(window)};
}

QuotientSingularity complementary_type(const QuotientSingularity& s) {
    if (!is_R(s)) fail(Errc::invariant_violation, s.str() + " is not an R-singularity");
    const auto [l, k] = index_width(s);
    // realise s as cone((0,1), (R,-A)); the edge has direction step e with
    // |edge| = k steps; extend (l - k) steps past the second generator
    const Vec2 g2{s.order, -s.weight};
    const Vec2 step{s.order / k, (-s.weight - 1) / k};
    const Vec2 q = g2 + (l - k) * step;
    return classify_cone(Cone2{g2, q});
}

BasketSplit split_basket(const Basket& basket) {
    for (const auto& [s, c] : basket) {
        if (!is_R(s)) fail(Errc::invariant_violation, "basket member " + s.str() + " is not R");
        if (c < 1) fail(Errc::invariant_violation, "non-positive multiplicity");
    }
    BasketSplit split{basket, {}, true};
    // pairs extracted in sorted order of (l, R, A) for determinism
    std::vector<QuotientSingularity> order;
    for (const auto& [s, c] : basket) order.push_back(s);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        const Int la = index_width(a).local_index, lb = index_width(b).local_index;
        if (la != lb) return la < lb;
        return a < b;
    });
    for (const auto& s : order) {
        const QuotientSingularity partner = complementary_type(s);
        while (true) {
            const auto it_s = split.reduced.find(s);
            const auto it_p = split.reduced.find(partner);
            if (it_s == split.reduced.end() || it_p == split.reduced.end()) break;
            if (s == partner && it_s->second < 2) break;
            basket_insert(split.reduced, s, -1);
            basket_insert(split.reduced, partner, -1);
            split.invisible.emplace_back(s, partner);
        }
    }
    // greedy runs to a fixpoint, so no pair can remain; verified anyway
    for (const auto& [s, c] : split.reduced) {
        const QuotientSingularity partner = complementary_type(s);
        if (s == partner ? c >= 2 : split.reduced.count(partner) > 0)
            split.pairing_complete = false;
    }
    return split;
}

CollapseReport predict(const FanoPolygon& polygon) {
    const SingularityContent content = singularity_content(polygon);
    const BasketSplit split = split_basket(content.basket);

    std::vector<Int> reduced_indices;
    for (const auto& [s, c] : split.reduced) reduced_indices.push_back(index_width(s).local_index);
    const Int predicted_pi = lcm_over(reduced_indices);

    std::vector<Int> invisible_and_t = content.t_indices;
    for (const auto& [s, t] : split.invisible) {
        invisible_and_t.push_back(index_width(s).local_index);
        invisible_and_t.push_back(index_width(t).local_index);
    }
    const Int l_ibt = lcm_over(invisible_and_t);
    Int predicted_r = l_ibt;
    mpz_lcm(predicted_r.get_mpz_t(), predicted_r.get_mpz_t(), predicted_pi.get_mpz_t());
    Int g;
    mpz_gcd(g.get_mpz_t(), predicted_pi.get_mpz_t(), l_ibt.get_mpz_t());
    const Rat predicted_discrepancy = Rat(l_ibt) / Rat(g);

    const Polygon d = dual(polygon);
    const Int measured_r = d.denominator();
    const QuasiPolynomial qp = quasi_polynomial(d);
    smooth_part(polygon, qp);  // leading-coefficient cross-check
    const Int measured_pi = quasi_period(qp);

    CollapseReport report{measured_pi, measured_r, predicted_pi, predicted_r,
                          predicted_discrepancy,
                          /*pairing_complete=*/false, /*consistent=*/false,
                          content, split};
    report.pairing_complete = split.pairing_complete && measured_pi == predicted_pi;
    report.consistent = report.pairing_complete && measured_r == predicted_r;
    return report;
}

}  // namespace qpc
