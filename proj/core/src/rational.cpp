#include "qpc/rational.hpp"

#include <cctype>

#include "qpc/error.hpp"

namespace qpc {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::parse_error: return "ParseError";
        case Errc::degenerate_polygon: return "DegeneratePolygon";
        case Errc::not_full_dimensional: return "NotFullDimensional";
        case Errc::origin_not_interior: return "OriginNotInterior";
        case Errc::non_integral_vertex: return "NonIntegralVertex";
        case Errc::non_primitive_vertex: return "NonPrimitiveVertex";
        case Errc::degenerate_cone: return "DegenerateCone";
        case Errc::non_integral_residue: return "NonIntegralResidue";
        case Errc::factor_too_long: return "FactorTooLong";
        case Errc::vertex_not_covered: return "VertexNotCovered";
        case Errc::invalid_mutation_data: return "InvalidMutationData";
        case Errc::inconsistent_fit: return "InconsistentFit";
        case Errc::not_periodic: return "NotPeriodic";
        case Errc::leading_coefficient_mismatch: return "LeadingCoefficientMismatch";
        case Errc::non_convex_image: return "NonConvexImage";
        case Errc::not_reachable: return "NotReachable";
        case Errc::invariant_violation: return "InvariantViolation";
    }
    return "UnknownError";
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(Errc::parse_error, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_canonical_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-') {
        if (s.size() == 1) return false;
        i = 1;
    }
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    if (s.size() - i > 1 && s[i] == '0') return false;  // leading zero
    if (s[0] == '-' && s == "-0") return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    if (!is_canonical_integer_text(num_text))
        fail(Errc::parse_error, "bad rational '" + std::string(text) + "'");
    Int num(std::string(num_text), 10);
    if (slash == std::string_view::npos) return Rat(num);

    std::string_view den_text = text.substr(slash + 1);
    if (!is_canonical_integer_text(den_text) || den_text[0] == '-')
        fail(Errc::parse_error, "bad rational '" + std::string(text) + "'");
    Int den(std::string(den_text), 10);
    if (den == 0) fail(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    if (den == 1) fail(Errc::parse_error, "denominator 1 must be omitted in '" + std::string(text) + "'");
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) fail(Errc::parse_error, "non-lowest-terms rational '" + std::string(text) + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_str(const Int& n) { return n.get_str(); }

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int ceil_div(const Int& a, const Int& b) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& a, const Int& mod) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        fail(Errc::invariant_violation, "no inverse of " + a.get_str() + " mod " + mod.get_str());
    return r;
}

}  // namespace qpc
