#include "qpc/singularity.hpp"

#include <algorithm>

#include "qpc/error.hpp"

namespace qpc {

QuotientSingularity QuotientSingularity::make(const Int& order, const Int& weight) {
    if (order < 1) fail(Errc::invariant_violation, "order must be positive");
    Int a;
    mpz_mod(a.get_mpz_t(), weight.get_mpz_t(), order.get_mpz_t());
    if (order == 1) return {Int(1), Int(0)};
    Int g;
    mpz_gcd(g.get_mpz_t(), order.get_mpz_t(), a.get_mpz_t());
    if (g != 1)
        fail(Errc::invariant_violation,
             "1/" + order.get_str() + "(1," + a.get_str() + ") is not well-formed");
    const Int inv = mod_inverse(a, order);
    return {order, std::min(a, inv)};
}

std::string QuotientSingularity::str() const {
    return "1/" + order.get_str() + "(1," + weight.get_str() + ")";
}

QuotientSingularity classify_cone(const Cone2& cone) {
    const Int det = cross(cone.g1, cone.g2);
    if (det == 0)
        fail(Errc::degenerate_cone, "generators " + cone.g1.str() + ", " + cone.g2.str());
    const Int big_r = abs(det);

    // unimodular map with g1 -> (0,1); then g2 -> (+-R, y)
    Int g, al, be;
    mpz_gcdext(g.get_mpz_t(), al.get_mpz_t(), be.get_mpz_t(), cone.g1.x.get_mpz_t(),
               cone.g1.y.get_mpz_t());
    if (g != 1) fail(Errc::degenerate_cone, "generator " + cone.g1.str() + " not primitive");
    const UnimodularMap u{-cone.g1.y, cone.g1.x, al, be};
    Vec2 img = u(cone.g2);
    if (img.x < 0) img.x = -img.x;  // reflect (x,y) -> (-x,y), fixing (0,1)
    // img.x == R; shearing x -> x, y -> y + t*x normalises y mod R
    Int a;
    mpz_mod(a.get_mpz_t(), Int(-img.y).get_mpz_t(), big_r.get_mpz_t());
    return QuotientSingularity::make(big_r, a);
}

IndexWidth index_width(const QuotientSingularity& s) {
    Int k;
    const Int a1 = s.weight + 1;
    mpz_gcd(k.get_mpz_t(), s.order.get_mpz_t(), a1.get_mpz_t());
    return {s.order / k, k};
}

bool is_T(const QuotientSingularity& s) {
    const auto [l, k] = index_width(s);
    return k % l == 0;
}

bool is_R(const QuotientSingularity& s) {
    const auto [l, k] = index_width(s);
    return k < l;
}

SingularityData residue(const QuotientSingularity& s) {
    const auto [l, k] = index_width(s);
    Int d, rho;
    mpz_fdiv_qr(d.get_mpz_t(), rho.get_mpz_t(), k.get_mpz_t(), l.get_mpz_t());
    SingularityData data{s, l, k, d, rho, std::nullopt};
    if (rho == 0) return data;
    // res = 1/(rho*l)(1, rho*c/k - 1) with c = A + 1; k | c since k = gcd(R, c),
    // checked anyway before dividing
    const Int c = s.weight + 1;
    if ((rho * c) % k != 0)
        fail(Errc::non_integral_residue, "rho*c/k not integral for " + s.str());
    data.residue = QuotientSingularity::make(rho * l, rho * c / k - 1);
    return data;
}

SingularityContent singularity_content(const FanoPolygon& polygon) {
    SingularityContent content{Int(0), {}, {}};
    for (const auto& cone : polygon.spanning_fan()) {
        const SingularityData data = residue(classify_cone(cone));
        content.total_d += data.d;
        if (data.residue) basket_insert(content.basket, *data.residue);
        content.t_indices.push_back(data.local_index);
    }
    std::sort(content.t_indices.begin(), content.t_indices.end());
    return content;
}

Int gorenstein_index(const FanoPolygon& polygon) {
    Int l(1);
    for (const auto& cone : polygon.spanning_fan()) {
        const auto iw = index_width(classify_cone(cone));
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), iw.local_index.get_mpz_t());
    }
    return l;
}

Int basket_size(const Basket& basket) {
    Int n(0);
    for (const auto& [s, c] : basket) n += c;
    return n;
}

void basket_insert(Basket& basket, const QuotientSingularity& s, long count) {
    basket[s] += count;
    if (basket[s] == 0) basket.erase(s);
}

std::vector<std::string> basket_strings(const Basket& basket) {
    std::vector<std::string> out;
    for (const auto& [s, c] : basket)
        out.push_back(std::to_string(c) + " x " + s.str());
    return out;
}

}  // namespace qpc
