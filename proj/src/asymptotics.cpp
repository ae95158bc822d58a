#include "kcross/asymptotics.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace kcross {

namespace {

constexpr std::array<int, 4> kLambdas{8, 4, 2, 1};

// Sequences over the level index i spanned by {8^i, 4^i, 2^i, 1}. Every
// aggregate of the side-count trees lives in this space, so the level
// recurrences can be solved once in closed form instead of iterated.
struct GeoSeq {
    std::array<Rat, 4> comp{};

    static int slot(int lambda) {
        for (int idx = 0; idx < 4; ++idx)
            if (kLambdas[idx] == lambda) return idx;
        throw std::logic_error("GeoSeq: unsupported base");
    }
    Rat& at(int lambda) { return comp[slot(lambda)]; }
    const Rat& at(int lambda) const { return comp[slot(lambda)]; }
};

GeoSeq operator+(const GeoSeq& l, const GeoSeq& r) {
    GeoSeq g;
    for (int idx = 0; idx < 4; ++idx) g.comp[idx] = l.comp[idx] + r.comp[idx];
    return g;
}

GeoSeq operator-(const GeoSeq& l, const GeoSeq& r) {
    GeoSeq g;
    for (int idx = 0; idx < 4; ++idx) g.comp[idx] = l.comp[idx] - r.comp[idx];
    return g;
}

GeoSeq operator*(const Rat& f, const GeoSeq& g) {
    GeoSeq out;
    for (int idx = 0; idx < 4; ++idx) out.comp[idx] = f * g.comp[idx];
    return out;
}

// u_{i+1} = mu u_i + forcing(i) with u_0 = init. The forcing never has a
// component at mu here (the recurrence bases 2, 4, 8 strictly dominate
// their forcings), so the particular solution is componentwise.
GeoSeq solve_rec(int mu, const GeoSeq& forcing, const Rat& init) {
    GeoSeq out;
    Rat hom = init;
    for (int idx = 0; idx < 4; ++idx) {
        const Rat& f = forcing.comp[idx];
        if (f == 0) continue;
        int lambda = kLambdas[idx];
        if (lambda == mu) throw std::logic_error("solve_rec: resonant forcing");
        Rat part = f / (lambda - mu);
        out.comp[idx] += part;
        hom -= part;
    }
    out.at(mu) += hom;
    return out;
}

// (u 2^i + v)^2 as a sequence.
GeoSeq square_affine(const Rat& u, const Rat& v) {
    GeoSeq g;
    g.at(4) = u * u;
    g.at(2) = 2 * u * v;
    g.at(1) = v * v;
    return g;
}

// sum_{i=0}^{t-1} 16^{t-1-i} g(i): each lambda component f contributes
// f (16^t - lambda^t) / (16 - lambda).
TermCoeffs weighted_total(const GeoSeq& g) {
    TermCoeffs tc{};
    for (int idx = 0; idx < 4; ++idx) {
        const Rat& f = g.comp[idx];
        if (f == 0) continue;
        int lambda = kLambdas[idx];
        Rat part = f / (16 - lambda);
        tc.c4 += part;
        switch (lambda) {
            case 8: tc.c3 -= part; break;
            case 4: tc.c2 -= part; break;
            case 2: tc.c1 -= part; break;
            case 1: tc.c0 -= part; break;
        }
    }
    return tc;
}

TermCoeffs scaled(TermCoeffs tc, int f) {
    tc.c4 *= f;
    tc.c3 *= f;
    tc.c2 *= f;
    tc.c1 *= f;
    tc.c0 *= f;
    return tc;
}

struct CellSeqs {
    GeoSeq spine; // value on the all-second-child path
    GeoSeq off;   // total over the remaining nodes of the level
    GeoSeq sum;   // total over the level
    GeoSeq sumsq; // total of squared values over the level
};

// Level aggregates of one cell of a side-count tree. The spine keeps the
// parent environment (offsets a, o2a); every off-spine node and all its
// children use (b, o2b). With identical pairs this degenerates to the
// uniform tree.
CellSeqs cell_sequences(long long x, int a, int o2a, int b, int o2b) {
    GeoSeq fs;
    fs.at(1) = o2a;
    GeoSeq s = solve_rec(2, fs, x);
    Rat u = s.at(2), v = s.at(1);

    GeoSeq nodes; // off-spine node count 2^i - 1
    nodes.at(2) = 1;
    nodes.at(1) = -1;

    GeoSeq forcing_t = Rat(b + o2b) * nodes;
    forcing_t.at(2) += 2 * u;
    forcing_t.at(1) += 2 * v + a;
    GeoSeq off = solve_rec(4, forcing_t, 0);

    GeoSeq forcing_q = Rat(4 * (b + o2b)) * off +
                       Rat(b * b + o2b * o2b) * nodes +
                       square_affine(2 * u, 2 * v + a);
    GeoSeq sq = solve_rec(8, forcing_q, 0);

    CellSeqs cs;
    cs.spine = s;
    cs.off = off;
    cs.sum = s + off;
    cs.sumsq = square_affine(u, v) + sq;
    return cs;
}

} // namespace

Rat TermCoeffs::eval(unsigned t) const {
    BigInt p1 = pow2(t);
    BigInt p2 = p1 * p1;
    BigInt p3 = p2 * p1;
    BigInt p4 = p3 * p1;
    return c4 * Rat(p4) + c3 * Rat(p3) + c2 * Rat(p2) + c1 * Rat(p1) + c0;
}

TermCoeffs& TermCoeffs::operator+=(const TermCoeffs& o) {
    c4 += o.c4;
    c3 += o.c3;
    c2 += o.c2;
    c1 += o.c1;
    c0 += o.c0;
    return *this;
}

TermCoeffs TermCoeffs::operator+(const TermCoeffs& o) const {
    TermCoeffs tc = *this;
    tc += o;
    return tc;
}

BigInt tree_value(long long x, int o1, int o2, unsigned i, unsigned long long j) {
    BigInt width = BigInt(1) << i;
    if (j < 1 || BigInt(j) > width)
        throw std::invalid_argument("tree_value: node index out of range");
    return width * x + BigInt(o1) * (width - j) + BigInt(o2) * (BigInt(j) - 1);
}

TermCoeffs global_term(std::size_t n) {
    // Level i has n 2^i points: C(n 2^i, 2) - n 2^i crossing pairs among
    // copies of distinct edges over the same parent edge.
    Rat nn{BigInt(n)};
    GeoSeq g;
    g.at(4) = nn * nn / 2;
    g.at(2) = -3 * nn / 2;
    return weighted_total(g);
}

TermCoeffs quad_term(long long x, int o1, int o2) {
    CellSeqs cs = cell_sequences(x, o1, o2, o1, o2);
    return weighted_total(Rat(1, 2) * (cs.sumsq - cs.sum));
}

TermCoeffs lin_term(long long x, int o1, int o2) {
    return weighted_total(cell_sequences(x, o1, o2, o1, o2).sum);
}

TermCoeffs vertex_terms(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                        std::size_t p, const VertexDetails& det) {
    if (p >= P.size()) throw std::invalid_argument("vertex_terms: vertex out of range");
    std::size_t q = m(p);
    return vertex_terms(side_counts(P, chi, p, q), chi.at(p, q), det);
}

TermCoeffs vertex_terms(const SideCounts& sc, int matched_color,
                        const VertexDetails& det) {
    int k = sc.k;
    int mu = matched_color;
    int nu = det.m1 == M1::Sibling ? det.c_prime : mu;
    EnvOffsets env_mu = env_offsets(det, mu, k);
    EnvOffsets env_nu = env_offsets(det, nu, k);
    TermCoeffs total{};
    for (int c = 1; c <= k; ++c)
        for (Side d : {Side::Left, Side::Right}) {
            CellSeqs cs = cell_sequences(sc.at(c, d), env_mu.o1(c, d), env_mu.o2(c, d),
                                         env_nu.o1(c, d), env_nu.o2(c, d));
            total += scaled(weighted_total(Rat(1, 2) * (cs.sumsq - cs.sum)), 4);
            if (c == mu) total += scaled(weighted_total(cs.spine), 2);
            if (c == nu) total += scaled(weighted_total(cs.off), 2);
        }
    return total;
}

namespace {

TermCoeffs drawing_terms(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                         const std::vector<VertexDetails>& details) {
    std::size_t n = P.size();
    if (chi.n != n) throw std::invalid_argument("coloring size mismatch");
    m.validate(n);
    if (details.size() != n) throw std::invalid_argument("details size mismatch");
    TermCoeffs total = global_term(n);
    for (std::size_t p = 0; p < n; ++p) total += vertex_terms(P, chi, m, p, details[p]);
    return total;
}

} // namespace

BigInt formula_count(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                     const std::vector<VertexDetails>& details, unsigned t) {
    TermCoeffs total = drawing_terms(P, chi, m, details);
    BigInt cr0 = count_monochromatic(P, chi);
    Rat val = total.eval(t) + Rat(cr0) * Rat(pow2(4 * t));
    if (denominator(val) != 1) throw std::logic_error("formula_count: non-integral total");
    return numerator(val);
}

AsymptoticCoeffs growth_coefficients(const PointSet& P, const EdgeColoring& chi,
                                     const Matching& m,
                                     const std::vector<VertexDetails>& details) {
    TermCoeffs total = drawing_terms(P, chi, m, details);
    BigInt cr0 = count_monochromatic(P, chi);
    return {Rat(cr0) + total.c4, total.c3, total.c2, total.c1, total.c0};
}

Rat local_alpha(const PointSet& P, const EdgeColoring& chi, const Matching& m,
                std::size_t p, const VertexDetails& det) {
    return vertex_terms(P, chi, m, p, det).c4;
}

Rat bound_from_alpha(const Rat& alpha, std::size_t n) {
    if (n == 0) throw std::invalid_argument("bound_from_alpha: empty drawing");
    BigInt nn(n);
    return 24 * alpha / Rat(nn * nn * nn * nn);
}

std::vector<Rat> fit_powers(const std::vector<Rat>& values,
                            const std::vector<int>& bases) {
    std::size_t dim = bases.size();
    if (dim == 0 || values.size() != dim)
        throw std::invalid_argument("fit_powers: need one value per base");
    std::vector<std::vector<Rat>> aug(dim, std::vector<Rat>(dim + 1));
    for (std::size_t t = 0; t < dim; ++t) {
        for (std::size_t j = 0; j < dim; ++j) {
            Rat pw = 1;
            for (std::size_t e = 0; e < t; ++e) pw *= bases[j];
            aug[t][j] = pw;
        }
        aug[t][dim] = values[t];
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = col;
        while (piv < dim && aug[piv][col] == 0) ++piv;
        if (piv == dim) throw std::invalid_argument("fit_powers: singular system");
        std::swap(aug[piv], aug[col]);
        for (std::size_t row = 0; row < dim; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            Rat f = aug[row][col] / aug[col][col];
            for (std::size_t j = col; j <= dim; ++j) aug[row][j] -= f * aug[col][j];
        }
    }
    std::vector<Rat> out(dim);
    for (std::size_t j = 0; j < dim; ++j) out[j] = aug[j][dim] / aug[j][j];
    return out;
}

} // namespace kcross
