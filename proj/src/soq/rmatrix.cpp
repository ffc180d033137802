#include "qweyl/soq/rmatrix.hpp"

#include <algorithm>
#include <optional>
#include <fstream>
#include <sstream>

#include "qweyl/coeff/parse.hpp"
#include "qweyl/error.hpp"

namespace qweyl::soq {

using coeff::GaussianRational;

RatMatrix to_rat(const ScalarMatrix& m) {
    RatMatrix out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = RatFunc(m(r, c));
    return out;
}

std::size_t RMatrix::position(int label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw BadParams("index label " + std::to_string(label) + " not in basis");
    return static_cast<std::size_t>(it - labels.begin());
}

std::vector<Scalar> rmatrix_eigenvalues(int N) {
    return {Scalar::q(), -Scalar::q_pow(-1), Scalar::q_pow(1 - N)};
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<int> parse_labels(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw SyntaxError("bad basis label '" + item + "'");
        }
    }
    return out;
}

std::string cell_text(const RMatrix& r, std::size_t row, std::size_t col) {
    auto n = static_cast<std::size_t>(r.N);
    auto lab = [&](std::size_t p) { return std::to_string(r.labels[p]); };
    return "(" + lab(row / n) + "," + lab(row % n) + "),(" + lab(col / n) + "," + lab(col % n) + ")";
}

// Label text for a row/column of an N³ tensor cell.
std::string triple_text(const RMatrix& r, std::size_t idx) {
    auto n = static_cast<std::size_t>(r.N);
    return std::to_string(r.labels[idx / (n * n)]) + "," + std::to_string(r.labels[(idx / n) % n]) + "," +
           std::to_string(r.labels[idx % n]);
}

template <class T>
std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const Matrix<T>& m) {
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            if (!m(r, c).is_zero()) return std::pair{r, c};
    return std::nullopt;
}

ScalarMatrix cubic_of(const ScalarMatrix& R, const std::vector<Scalar>& lambdas) {
    auto one = ScalarMatrix::identity(R.size());
    ScalarMatrix acc = one;
    for (const auto& l : lambdas) acc = acc * (R - one.scaled(l));
    return acc;
}

}  // namespace

RMatrix parse_rmatrix(std::string_view text) {
    RMatrix out;
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string body = trim(line);
        if (body.empty()) continue;
        if (!have_header) {
            std::istringstream hs(body);
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw SyntaxError("line " + std::to_string(line_no) + ": bad header token '" + tok + "'");
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "N") out.N = std::stoi(val);
                else if (key == "basis") out.labels = parse_labels(val);
                else throw SyntaxError("line " + std::to_string(line_no) + ": unknown header key '" + key + "'");
            }
            if (out.N <= 0 || static_cast<int>(out.labels.size()) != out.N)
                throw ValidationFailed("header needs N=<n> and exactly n basis labels");
            auto n2 = static_cast<std::size_t>(out.N * out.N);
            out.R = ScalarMatrix(n2);
            have_header = true;
            continue;
        }
        std::istringstream ls(body);
        int idx[4];
        for (int& v : idx)
            if (!(ls >> v)) throw SyntaxError("line " + std::to_string(line_no) + ": expected four index labels");
        std::string rest;
        std::getline(ls, rest);
        Scalar value;
        try {
            value = coeff::parse_scalar(rest);
        } catch (const SyntaxError& e) {
            throw SyntaxError("line " + std::to_string(line_no) + ": " + e.what());
        }
        std::size_t a = out.position(idx[0]), b = out.position(idx[1]);
        std::size_t c = out.position(idx[2]), d = out.position(idx[3]);
        out.R(out.pair(a, b), out.pair(c, d)) = value;
    }
    if (!have_header) throw ValidationFailed("missing header line");
    return out;
}

RMatrix read_rmatrix_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw BadParams("cannot open R-matrix file " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_rmatrix(buf.str());
}

RMatrixValidation validate_rmatrix(RMatrix& r) {
    RMatrixValidation v;
    auto n = static_cast<std::size_t>(r.N);
    const auto& R = r.R;

    auto R12 = R.kron_identity_right(n);
    auto R23 = R.kron_identity_left(n);
    auto braid = R12 * R23 * R12 - R23 * R12 * R23;
    if (auto cell = first_nonzero(braid))
        throw ValidationFailed("braid identity fails at cell (" + triple_text(r, cell->first) + "),(" +
                               triple_text(r, cell->second) + ")");
    v.braid = true;

    auto lambdas = rmatrix_eigenvalues(r.N);
    auto cubic = cubic_of(R, lambdas);
    if (auto cell = first_nonzero(cubic)) {
        bool q_free = true;
        for (std::size_t a = 0; a < R.size() && q_free; ++a)
            for (std::size_t b = 0; b < R.size(); ++b)
                if (!R(a, b).is_constant() && !R(a, b).is_zero()) {
                    q_free = false;
                    break;
                }
        if (q_free)
            throw DegenerateEigenvalues("entries do not depend on q; at q = 1 the eigenvalues q and q^(1-N) coincide");
        throw ValidationFailed("cubic characteristic identity fails at cell " + cell_text(r, cell->first, cell->second));
    }
    v.cubic = true;

    // From the cubic: R^-1 = (R^2 - e1 R + e2) / e3.
    const Scalar &a = lambdas[0], &b = lambdas[1], &c = lambdas[2];
    Scalar e1 = a + b + c, e2 = a * b + a * c + b * c, e3 = a * b * c;
    auto one = ScalarMatrix::identity(R.size());
    r.R_inv = (R * R - R.scaled(e1) + one.scaled(e2)).scaled(e3.inverse());
    if (!(R * r.R_inv == one) || !(r.R_inv * R == one)) throw ValidationFailed("R-matrix is not invertible");
    v.invertible = true;
    return v;
}

RMatrix load_and_validate_rmatrix(const std::filesystem::path& file) {
    RMatrix r = read_rmatrix_file(file);
    validate_rmatrix(r);
    return r;
}

ProjectorSet spectral_projectors(const RMatrix& r) {
    ProjectorSet out;
    out.eigenvalues = rmatrix_eigenvalues(r.N);
    const auto& l = out.eigenvalues;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            if (l[a] == l[b]) throw DegenerateEigenvalues("eigenvalues " + l[a].to_string() + " coincide");
    RatMatrix R = to_rat(r.R);
    auto one = RatMatrix::identity(R.size());
    auto proj = [&](std::size_t i) {
        RatMatrix acc = one;
        RatFunc den(1);
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == i) continue;
            acc = acc * (R - one.scaled(RatFunc(l[j])));
            den = den * RatFunc(l[i] - l[j]);
        }
        return acc.scaled(RatFunc(1) / den);
    };
    out.P_plus = proj(0);
    out.P_minus = proj(1);
    out.P_zero = proj(2);
    return out;
}

ProjectorChecks check_projectors(const RMatrix& r, const ProjectorSet& p) {
    ProjectorChecks c;
    const RatMatrix* P[3] = {&p.P_plus, &p.P_minus, &p.P_zero};
    auto n = P[0]->size();
    c.idempotent = true;
    c.orthogonal = true;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            auto prod = *P[a] * *P[b];
            if (a == b) c.idempotent = c.idempotent && prod == *P[a];
            else c.orthogonal = c.orthogonal && prod.is_zero();
        }
    c.complete = (*P[0] + *P[1] + *P[2]) == RatMatrix::identity(n);
    RatMatrix rec = P[0]->scaled(RatFunc(p.eigenvalues[0])) + P[1]->scaled(RatFunc(p.eigenvalues[1])) +
                    P[2]->scaled(RatFunc(p.eigenvalues[2]));
    c.reconstructs = rec == to_rat(r.R);
    return c;
}

std::size_t exact_rank(const RatMatrix& m) {
    RatMatrix a = m;
    std::size_t n = a.size(), rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) continue;
        for (std::size_t c = 0; c < n; ++c) std::swap(a(rank, c), a(piv, c));
        RatFunc inv = RatFunc(1) / a(rank, col);
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            RatFunc f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(rank, c);
        }
        ++rank;
    }
    return rank;
}

namespace {

Scalar require_laurent(const RatFunc& f, const std::string& what) {
    auto l = f.as_laurent();
    if (!l) throw BadParams(what + " is not a Laurent polynomial: " + f.to_string());
    return *l;
}

// Square root of c s^(2k) with c a square of a positive rational.
Scalar monomial_sqrt(const Scalar& m) {
    if (!m.is_monomial() || m.min_exponent() % 2 != 0 || !m.terms()[0].second.is_real())
        throw BadParams("metric normalization needs a square root of " + m.to_string());
    mpq_class c = m.terms()[0].second.re();
    if (sgn(c) <= 0) throw BadParams("metric normalization needs a square root of " + m.to_string());
    mpz_class num = c.get_num(), den = c.get_den();
    mpz_class rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) throw BadParams("no rational square root of " + m.to_string());
    return Scalar::monomial(GaussianRational(mpq_class(rn, rd)), m.min_exponent() / 2);
}

}  // namespace

Metric extract_metric(const RatMatrix& P0, int N) {
    auto n = static_cast<std::size_t>(N);
    if (P0.size() != n * n) throw BadParams("P0 has the wrong size for N");
    std::size_t rank = exact_rank(P0);
    if (rank != 1) throw NotRankOne("reshaped P0 has rank " + std::to_string(rank));
    auto cell = first_nonzero(P0);
    std::size_t r0 = cell->first, c0 = cell->second;

    // Column c0 is proportional to g^{ij}, row r0 to g_{kl}.
    RatMatrix lower(n), upper(n);
    for (std::size_t k = 0; k < n * n; ++k) {
        lower(k / n, k % n) = P0(r0, k);
        upper(k / n, k % n) = P0(k, c0);
    }
    // Normalize g_lower so that g_lower^2 = 1.
    std::size_t mid = n / 2;
    RatFunc scale;
    if (n % 2 == 1) {
        scale = RatFunc(1) / lower(mid, mid);
    } else {
        RatFunc prod = lower(mid, mid - 1) * lower(mid - 1, mid);
        Scalar root = monomial_sqrt(require_laurent(prod, "metric product"));
        scale = RatFunc(1) / RatFunc(root);
    }
    lower = lower.scaled(scale);
    if (!(lower * lower == RatMatrix::identity(n)))
        throw BadParams("normalized metric does not square to the identity");

    Metric g;
    g.N = N;
    g.g_lower = ScalarMatrix(n);
    g.g_upper = ScalarMatrix(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.g_lower(a, b) = require_laurent(lower(a, b), "metric entry");
    // g^{..} is the inverse of g_{..}, which here is g_{..} itself.
    g.g_upper = g.g_lower;
    // upper must be proportional to the extracted column.
    std::size_t i0 = r0 / n, j0 = r0 % n, k0 = c0 / n, l0 = c0 % n;
    g.c = P0(r0, c0) / (RatFunc(g.g_upper(i0, j0)) * RatFunc(g.g_lower(k0, l0)));
    if (!metric_reconstructs(P0, g)) throw NotRankOne("P0 does not factor through the normalized metric");
    return g;
}

bool metric_reconstructs(const RatMatrix& P0, const Metric& g) {
    auto n = static_cast<std::size_t>(g.N);
    for (std::size_t r = 0; r < n * n; ++r)
        for (std::size_t c = 0; c < n * n; ++c) {
            RatFunc expect = g.c * RatFunc(g.g_upper(r / n, r % n)) * RatFunc(g.g_lower(c / n, c % n));
            if (!(P0(r, c) == expect)) return false;
        }
    return true;
}

}  // namespace qweyl::soq
