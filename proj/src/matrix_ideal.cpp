#include "matrix_ideal.hpp"

namespace lsreal {

namespace {

PolyQ q_const(long v) {
    RationalField field;
    return poly_const(field, field.from_long(v));
}

PolyQ q_var(int i) {
    RationalField field;
    return poly_term(field, Monomial::var(i), field.one());
}

} // namespace

PolyQ det3(const std::array<std::array<PolyQ, 3>, 3>& c, const MonomialOrder& order) {
    RationalField field;
    auto minor = [&](int r1, int r2, int j1, int j2) {
        return poly_sub(poly_mul(c[j1][r1], c[j2][r2], field, order),
                        poly_mul(c[j1][r2], c[j2][r1], field, order), field, order);
    };
    PolyQ result = poly_mul(c[0][0], minor(1, 2, 1, 2), field, order);
    result = poly_sub(result, poly_mul(c[1][0], minor(1, 2, 0, 2), field, order), field, order);
    result = poly_add(result, poly_mul(c[2][0], minor(1, 2, 0, 1), field, order), field, order);
    return result;
}

std::vector<std::array<PolyQ, 3>> build_matrix(const Framing& framing) {
    const int n = framing.space.n();
    const int n_prime = framing.n_prime;
    std::vector<std::array<PolyQ, 3>> columns(n);
    columns[0] = {q_const(0), q_const(1), q_const(1)};
    columns[1] = {q_const(0), q_const(0), q_const(1)};
    columns[2] = {q_const(0), q_const(1), q_const(0)};
    columns[3] = {q_const(1), q_const(1), q_const(1)};
    columns[4] = {q_const(1), q_const(0), q_const(0)};
    for (int j = 0; j < n_prime; ++j)
        columns[5 + j] = {q_const(1), q_var(j), q_var(n_prime + j)};
    for (int j = 0; j < framing.n_doubleprime; ++j)
        columns[5 + n_prime + j] = {q_const(0), q_const(1), q_var(2 * n_prime + j)};
    return columns;
}

DetIdeal build_ideal(const Framing& framing) {
    DetIdeal out;
    out.ideal.ring = framed_ring(framing.n_prime, framing.n_doubleprime);
    MonomialOrder order = MonomialOrder::make_degrevlex(out.ideal.ring.nvars());
    std::vector<std::array<PolyQ, 3>> columns = build_matrix(framing);

    for (PointSet line : framing.space.lines()) {
        std::vector<int> pts = set_to_points(line);
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b)
                for (size_t c = b + 1; c < pts.size(); ++c) {
                    ++out.determinants_total;
                    PolyQ d = det3({columns[pts[a] - 1], columns[pts[b] - 1], columns[pts[c] - 1]}, order);
                    if (d.is_zero()) {
                        ++out.determinants_trivial;
                    } else {
                        out.ideal.generators.push_back(std::move(d));
                        out.kept_triples.push_back({pts[a], pts[b], pts[c]});
                    }
                }
    }
    return out;
}

} // namespace lsreal
