#include "qpc/markov.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qpc/ehrhart.hpp"
#include "qpc/error.hpp"
#include "qpc/mutation.hpp"
#include "qpc/singularity.hpp"

namespace qpc {

namespace {

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

MarkovTriple MarkovTriple::make(const Int& a, const Int& b, const Int& c) {
    if (a < 1 || a > b || b > c) fail(Errc::not_reachable, "triple must satisfy 1 <= a <= b <= c");
    if (a * a + b * b + c * c != 3 * a * b * c)
        fail(Errc::not_reachable, "a^2 + b^2 + c^2 != 3abc");
    if (gcd_int(a, b) != 1 || gcd_int(a, c) != 1 || gcd_int(b, c) != 1)
        fail(Errc::not_reachable, "members are not pairwise coprime");
    if (a % 3 == 0 || b % 3 == 0 || c % 3 == 0)
        fail(Errc::invariant_violation, "a Markov number divisible by three");
    return {a, b, c};
}

bool operator<(const MarkovTriple& s, const MarkovTriple& t) {
    if (s.c != t.c) return s.c < t.c;
    if (s.b != t.b) return s.b < t.b;
    return s.a < t.a;
}

std::string MarkovTriple::str() const {
    return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

std::vector<MarkovTriple> markov_triples(const Int& max_c) {
    if (max_c < 1) fail(Errc::invariant_violation, "max_c must be positive");
    std::set<std::array<Int, 3>> seen;
    std::vector<std::array<Int, 3>> frontier{{Int(1), Int(1), Int(1)}};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::array<Int, 3>> next;
        for (const auto& [a, b, c] : frontier) {
            const std::array<std::array<Int, 3>, 3> children{{
                {b, c, 3 * b * c - a},
                {a, c, 3 * a * c - b},
                {a, b, 3 * a * b - c},
            }};
            for (auto child : children) {
                std::sort(child.begin(), child.end());
                if (child[2] > max_c) continue;
                if (seen.insert(child).second) next.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    std::vector<MarkovTriple> out;
    for (const auto& [a, b, c] : seen) out.push_back(MarkovTriple::make(a, b, c));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// sorted (a, b, c) with (a^2, b^2, c^2) the vertex weights of a Fano triangle
std::array<Int, 3> triangle_roots(const FanoPolygon& t) {
    if (t.size() != 3) fail(Errc::invariant_violation, "not a triangle");
    const auto vs = t.lattice_vertices();
    std::array<Int, 3> lam{abs(cross(vs[1], vs[2])), abs(cross(vs[2], vs[0])),
                           abs(cross(vs[0], vs[1]))};
    std::array<Int, 3> roots;
    for (int i = 0; i < 3; ++i) {
        Int r = sqrt(lam[i]);
        if (r * r != lam[i])
            fail(Errc::invariant_violation, "vertex weight " + lam[i].get_str() + " not a square");
        roots[i] = r;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

FanoPolygon p2_triangle() {
    return FanoPolygon::validate(Polygon::create(
        {Point2{Rat(1), Rat(0)}, Point2{Rat(0), Rat(1)}, Point2{Rat(-1), Rat(-1)}}));
}

}  // namespace

FanoPolygon markov_triangle(const MarkovTriple& triple) {
    const MarkovTriple t = MarkovTriple::make(triple.a, triple.b, triple.c);  // re-validate
    const std::array<Int, 3> target{t.a, t.b, t.c};

    std::map<std::array<Int, 3>, FanoPolygon> found;
    found.emplace(std::array<Int, 3>{Int(1), Int(1), Int(1)}, normal_form(p2_triangle()));
    std::vector<std::array<Int, 3>> frontier{{Int(1), Int(1), Int(1)}};
    while (found.find(target) == found.end()) {
        if (frontier.empty()) fail(Errc::not_reachable, "mutation replay exhausted");
        std::vector<std::array<Int, 3>> next;
        for (const auto& key : frontier) {
            const FanoPolygon& node = found.at(key);
            for (const auto& [data, nb] : mutation_neighbors(node)) {
                const auto roots = triangle_roots(nb);
                if (roots[2] > target[2]) continue;
                if (found.emplace(roots, nb).second) next.push_back(roots);
            }
        }
        frontier = std::move(next);
    }
    return found.at(target);
}

MarkovReport verify_markov(const MarkovTriple& triple) {
    const MarkovTriple t = MarkovTriple::make(triple.a, triple.b, triple.c);
    const FanoPolygon triangle = markov_triangle(t);

    // arithmetic route: the singularity 1/x^2(y^2, z^2) has local index
    // x^2 / gcd(x^2, z^2 * ybar^2 + 1), which must be x (x = 0 mod 3 never
    // happens for Markov numbers)
    std::vector<Int> arithmetic;
    const std::array<std::array<Int, 3>, 3> rotations{{
        {t.a, t.b, t.c},
        {t.b, t.c, t.a},
        {t.c, t.a, t.b},
    }};
    for (const auto& [x, y, z] : rotations) {
        const Int x2 = x * x;
        Int l;
        if (x2 == 1) {
            l = 1;
        } else {
            const Int ybar = mod_inverse(y, x2);
            const Int g = gcd_int(x2, z * z * ybar * ybar + 1);
            l = x2 / g;
        }
        if (x % 3 == 0)
            fail(Errc::invariant_violation, "index branch x = 0 mod 3 reached for " + t.str());
        if (l != x)
            fail(Errc::invariant_violation,
                 "arithmetic local index " + l.get_str() + " != " + x.get_str());
        arithmetic.push_back(l);
    }
    std::sort(arithmetic.begin(), arithmetic.end());

    std::vector<Int> geometric;
    for (const auto& cone : triangle.spanning_fan())
        geometric.push_back(index_width(classify_cone(cone)).local_index);
    std::sort(geometric.begin(), geometric.end());
    if (arithmetic != geometric)
        fail(Errc::invariant_violation, "arithmetic and geometric local indices disagree");

    const Polygon d = dual(triangle);
    MarkovReport report{t, arithmetic, d.denominator(), quasi_period(quasi_polynomial(d)),
                        triangle};
    return report;
}

}  // namespace qpc
