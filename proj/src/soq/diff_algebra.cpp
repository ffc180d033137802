#include "qweyl/soq/diff_algebra.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "qweyl/error.hpp"
#include "qweyl/freealg/rewriting.hpp"
#include "qweyl/freealg/syntax.hpp"

namespace qweyl::soq {

using freealg::Generator;
using freealg::normal_form;
using freealg::Presentation;
using freealg::Word;

namespace {

std::string label_suffix(int label) { return label < 0 ? "m" + std::to_string(-label) : std::to_string(label); }

std::vector<Element> star_images(const Presentation& pres, const std::vector<int>& labels,
                                 const std::vector<Scalar>& xs, const std::vector<Scalar>& ds, int N) {
    std::vector<Element> star(pres.generator_count());
    for (std::size_t m = 0; m < labels.size(); ++m) {
        int l = labels[m];
        star[pres.id(coordinate_name(l))] = xs[m] * pres.gen(coordinate_name(-l));
        star[pres.id(derivative_name(l))] = ds[m] * pres.gen(conjugate_derivative_name(-l));
        star[pres.id(conjugate_derivative_name(-l))] = ds[m].inverse() * pres.gen(derivative_name(l));
    }
    star[pres.id("Lam")] = Scalar::q_pow(-2 * N) * pres.gen("Laminv");
    star[pres.id("Laminv")] = Scalar::q_pow(2 * N) * pres.gen("Lam");
    return star;
}

std::string first_broken_rule(const Presentation& pres) {
    for (const auto& rule : pres.rules())
        if (!freealg::apply_star(pres, Element::word(rule.lhs) - rule.rhs).is_zero()) return rule.label;
    return {};
}

using RatRow = std::map<Word, RatFunc>;

Element row_to_element(const RatRow& row, const std::string& what) {
    Element out;
    for (const auto& [w, c] : row) {
        auto l = c.as_laurent();
        if (!l) throw ValidationFailed(what + ": coefficient " + c.to_string() + " is not a Laurent polynomial");
        out.add_term(w, *l);
    }
    return out;
}

// Row-reduces linear relations among words and adds one rule per pivot,
// solved for its leading word.
void add_linear_rules(Presentation& pres, const std::vector<RatRow>& rows, const std::string& prefix) {
    const auto& ord = pres.order();
    auto leading = [&](const RatRow& r) {
        const Word* best = nullptr;
        for (const auto& [w, c] : r)
            if (!best || ord.less(*best, w)) best = &w;
        return *best;
    };
    auto axpy = [](RatRow& dst, const RatFunc& f, const RatRow& src) {
        for (const auto& [w, c] : src) {
            RatFunc v = dst[w] - f * c;
            if (v.is_zero()) dst.erase(w);
            else dst[w] = v;
        }
    };
    std::vector<std::pair<Word, RatRow>> pivots;
    for (RatRow row : rows) {
        for (auto it = row.begin(); it != row.end();)
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
        for (const auto& [lead, prow] : pivots) {
            auto it = row.find(lead);
            if (it != row.end()) axpy(row, RatFunc(it->second), prow);
        }
        if (row.empty()) continue;
        Word lead = leading(row);
        RatFunc inv = RatFunc(1) / row[lead];
        for (auto& [w, c] : row) c = c * inv;
        for (auto& [plead, prow] : pivots) {
            auto it = prow.find(lead);
            if (it != prow.end()) axpy(prow, RatFunc(it->second), row);
        }
        pivots.emplace_back(lead, row);
    }
    int n = 0;
    for (auto& [lead, row] : pivots) {
        row.erase(lead);
        Element rhs = -row_to_element(row, prefix);
        pres.add_rule(lead, rhs, prefix + " " + std::to_string(++n));
    }
}

}  // namespace

std::string coordinate_name(int label) { return "x_" + label_suffix(label); }
std::string derivative_name(int label) { return "d_" + label_suffix(label); }
std::string conjugate_derivative_name(int label) { return "dh_" + label_suffix(label); }

Element DiffSO::x(int label) const { return full->gen(coordinate_name(label)); }
Element DiffSO::d(int label) const { return full->gen(derivative_name(label)); }
Element DiffSO::dh(int label) const { return full->gen(conjugate_derivative_name(label)); }
Element DiffSO::lam() const { return full->gen("Lam"); }
Element DiffSO::lam_inv() const { return full->gen("Laminv"); }

Element DiffSO::x_lower(int label) const {
    Element out;
    std::size_t k = R.position(label);
    for (int j : labels()) out += g.g_lower(k, R.position(j)) * x(j);
    return out;
}

Element DiffSO::L() const {
    Element out;
    for (int i : labels())
        for (int j : labels()) {
            const Scalar& c = g.g_lower(R.position(i), R.position(j));
            if (!c.is_zero()) out += c * (x(i) * x(j));
        }
    return out;
}

Element DiffSO::Delta() const {
    Element out;
    for (int i : labels())
        for (int j : labels()) {
            // Reversed word order, as in the derivative relations.
            const Scalar& c = g.g_upper(R.position(i), R.position(j));
            if (!c.is_zero()) out += c * (d(j) * d(i));
        }
    return out;
}

Scalar DiffSO::qconjr_factor() const {
    int n = N();
    RatFunc num = RatFunc(Scalar::q_pow(n - 1) * (Scalar::q() - Scalar::q_pow(-1)));
    RatFunc f = num / RatFunc(Scalar(1) + Scalar::q_pow(n - 2));
    auto l = f.as_laurent();
    if (!l) throw BadParams("conjugation prefactor " + f.to_string() + " is not a Laurent polynomial");
    return *l;
}

Element DiffSO::conj_numerator(int label) const {
    return d(label) + qconjr_factor() * (x_lower(label) * Delta());
}

Element DiffSO::conj_substitute(int label) const { return lam_inv() * conj_numerator(label); }

Element DiffSO::conj_action_defect(int k, int j) const {
    Element rhs;
    std::size_t pk = R.position(k), pj = R.position(j);
    for (int c : labels())
        for (int l : labels()) {
            const Scalar& b = R.inv_at(pj, R.position(c), pk, R.position(l));
            if (!b.is_zero()) rhs += (Scalar::q() * b) * (x(l) * conj_numerator(c));
        }
    return normal_form(conj_numerator(k) * x(j) - rhs, *conj_sector);
}

Element DiffSO::D(int label) const { return d(label) + Scalar::q_pow(-N()) * dh(label); }

PresentationPtr DiffSO::with_star(const std::vector<Scalar>& xs, const std::vector<Scalar>& ds) const {
    auto copy = std::make_shared<Presentation>(*full);
    copy->set_star(star_images(*copy, labels(), xs, ds, N()));
    return copy;
}

int DiffSO::r_exponent(int label) const { return label == 0 ? 1 : 2; }

Element DiffSO::r(int label) const {
    int e = r_exponent(label);
    return normal_form(D(label) * x(label) - Scalar::q_pow(e) * (x(label) * D(label)), *full);
}

Element DiffSO::r_tilde(int label) const {
    int e = r_exponent(label);
    return normal_form(D(label) * x(label) - Scalar::q_pow(-e) * (x(label) * D(label)), *full);
}

namespace {

DiffSO build_with(const RMatrix& r, const ProjectorSet& p, const Metric& g) {
    const auto& labels = r.labels;
    auto n = static_cast<std::size_t>(r.N);
    std::vector<Generator> gens;
    int prec = 0;
    for (int l : labels) gens.push_back({coordinate_name(l), 1, ++prec});
    for (int l : labels) gens.push_back({derivative_name(l), 1, ++prec});
    for (int l : labels) gens.push_back({conjugate_derivative_name(l), 1, ++prec});
    gens.push_back({"Laminv", 1, ++prec});
    gens.push_back({"Lam", 1, ++prec});

    auto make = [&](const std::string& name) { return std::make_shared<Presentation>(name, gens); };
    auto full = make("diffso" + std::to_string(r.N));
    auto x_pres = make("diffso" + std::to_string(r.N) + "-x");
    auto ds = make("diffso" + std::to_string(r.N) + "-d");
    auto cs = make("diffso" + std::to_string(r.N) + "-conj");

    auto X = [&](std::size_t pos) { return full->id(coordinate_name(labels[pos])); };
    auto Dd = [&](std::size_t pos) { return full->id(derivative_name(labels[pos])); };
    auto Dh = [&](std::size_t pos) { return full->id(conjugate_derivative_name(labels[pos])); };
    auto w2 = [](freealg::GenId a, freealg::GenId b) { return Word::single(a) + Word::single(b); };
    auto term = [](const Scalar& c, freealg::GenId a, freealg::GenId b) {
        return Element::word(Word::single(a) + Word::single(b), c);
    };

    // sum_{kl} P^-{ij}_{kl} x^k x^l = 0 for each (i,j). The derivative
    // relations contract the upper indices, in reversed word order:
    // sum_{ij} P^-{ij}_{kl} d_j d_i = 0. Only this reading is confluent
    // together with the action rules.
    auto plane_rows = [&](auto gen, bool upper) {
        std::vector<RatRow> rows;
        for (std::size_t a = 0; a < n * n; ++a) {
            RatRow row;
            for (std::size_t b = 0; b < n * n; ++b) {
                const RatFunc& c = upper ? p.P_minus(b, a) : p.P_minus(a, b);
                if (c.is_zero()) continue;
                Word w = upper ? w2(gen(b % n), gen(b / n)) : w2(gen(b / n), gen(b % n));
                row[w] += c;
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    auto x_rows = plane_rows(X, false);
    auto d_rows = plane_rows(Dd, true);
    auto dh_rows = plane_rows(Dh, true);

    for (auto* pr : {full.get(), x_pres.get(), cs.get()}) add_linear_rules(*pr, x_rows, "plane");
    for (auto* pr : {full.get(), ds.get(), cs.get()}) add_linear_rules(*pr, d_rows, "derivs");
    add_linear_rules(*full, dh_rows, "conj derivs");

    Scalar q = Scalar::q(), qi = Scalar::q_pow(-1);
    // d_i x^j -> delta + q sum R̂^{jk}_{il} x^l d_k, likewise for dh with R̂^-1.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element act1(i == j ? 1 : 0), act2(i == j ? 1 : 0);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const Scalar& a = r.at(j, k, i, l);
                    if (!a.is_zero()) act1 += term(q * a, X(l), Dd(k));
                    const Scalar& b = r.inv_at(j, k, i, l);
                    if (!b.is_zero()) act2 += term(qi * b, X(l), Dh(k));
                }
            std::string lab = labels[i] == labels[j] ? std::to_string(labels[i]) : std::to_string(labels[i]) + "," + std::to_string(labels[j]);
            for (auto* pr : {full.get(), cs.get()}) pr->add_rule(w2(Dd(i), X(j)), act1, "action " + lab);
            full->add_rule(w2(Dh(i), X(j)), act2, "conj action " + lab);
        }

    // dh_a d_b -> q sum R̂^{ba}_{dc} d_c dh_d, the cross relation in the
    // same reversed reading as the derivative relations.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Element rhs;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Scalar& m = r.at(b, a, d, c);
                    if (!m.is_zero()) rhs += term(q * m, Dd(c), Dh(d));
                }
            full->add_rule(w2(Dh(a), Dd(b)), rhs,
                           "cross " + std::to_string(labels[a]) + "," + std::to_string(labels[b]));
        }

    // Lam x = q^2 x Lam, Lam d = q^-2 d Lam, and the same for dh.
    auto lam = full->id("Lam"), laminv = full->id("Laminv");
    auto add_scaling = [&](Presentation& pr, bool with_dh) {
        for (std::size_t k = 0; k < n; ++k) {
            pr.add_rule(w2(lam, X(k)), term(q * q, X(k), lam), "scale x");
            pr.add_rule(w2(laminv, X(k)), term(qi * qi, X(k), laminv), "scale x");
            pr.add_rule(w2(lam, Dd(k)), term(qi * qi, Dd(k), lam), "scale d");
            pr.add_rule(w2(laminv, Dd(k)), term(q * q, Dd(k), laminv), "scale d");
            if (with_dh) {
                pr.add_rule(w2(lam, Dh(k)), term(qi * qi, Dh(k), lam), "scale dh");
                pr.add_rule(w2(laminv, Dh(k)), term(q * q, Dh(k), laminv), "scale dh");
            }
        }
        pr.add_rule(w2(lam, laminv), Element(1), "Lam inverse");
        pr.add_rule(w2(laminv, lam), Element(1), "Lam inverse");
    };
    add_scaling(*full, true);
    add_scaling(*cs, false);
    full->add_inverse_pair(lam, laminv);
    cs->add_inverse_pair(lam, laminv);

    // star(x^m) = sum_j g_{jm} x^j, which is x_scale[m] x^-m for the
    // antidiagonal metric.
    std::vector<Scalar> xs(n);
    for (std::size_t m = 0; m < n; ++m) {
        std::size_t mirror = r.position(-labels[m]);
        for (std::size_t j = 0; j < n; ++j)
            if (j != mirror && !g.g_lower(j, m).is_zero()) throw BadParams("metric is not antidiagonal");
        xs[m] = g.g_lower(mirror, m);
    }

    // The transcribed derivative star, for the record.
    std::vector<Scalar> transcribed(n);
    for (std::size_t m = 0; m < n; ++m)
        transcribed[m] = -Scalar::q_pow(-r.N) * g.g_lower(m, r.position(-labels[m]));
    std::string transcribed_failure;
    {
        Presentation trial = *full;
        trial.set_star(star_images(trial, labels, xs, transcribed, r.N));
        transcribed_failure = first_broken_rule(trial);
    }

    // Search a_m = -q^-N s^e_m / x_scale[m] with |e_m| <= 2N.
    int window = 2 * r.N;
    std::vector<int> e(n, -window);
    std::vector<Scalar> found;
    std::size_t solutions = 0;
    while (true) {
        std::vector<Scalar> ds(n);
        for (std::size_t m = 0; m < n; ++m) ds[m] = -Scalar::q_pow(-r.N) * Scalar::s_pow(e[m]) * xs[m].inverse();
        Presentation trial = *full;
        trial.set_star(star_images(trial, labels, xs, ds, r.N));
        if (first_broken_rule(trial).empty()) {
            if (solutions++ == 0) found = ds;
        }
        std::size_t k = 0;
        while (k < n && ++e[k] > window) e[k++] = -window;
        if (k == n) break;
    }
    if (solutions == 0) throw ValidationFailed("no derivative star scaling preserves the rules");
    full->set_star(star_images(*full, labels, xs, found, r.N));

    DiffSO out;
    out.R = r;
    out.projectors = p;
    out.g = g;
    out.full = full;
    out.x_sector = x_pres;
    out.d_sector = ds;
    out.conj_sector = cs;
    out.x_scale = xs;
    out.d_scale = found;
    out.d_scale_solutions = solutions;
    out.transcribed_star_failure = transcribed_failure;
    return out;
}

}  // namespace

DiffSO build_diff_presentation(const RMatrix& r, const ProjectorSet& p, const Metric& g) {
    return build_with(r, p, g);
}

bool SoqReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const SoqItem& i) { return i.pass; });
}

void SoqReport::add(std::string name, bool pass, std::string residual) {
    items.push_back({std::move(name), pass, std::move(residual)});
}

void SoqReport::append(const SoqReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

namespace {

std::string lab(int l) { return std::to_string(l); }

void add_zero(SoqReport& rep, const std::string& name, const Element& residual, const Presentation& pres) {
    rep.add(name, residual.is_zero(), freealg::to_text(residual, pres));
}

// lambda_m with star(D_m) = -lambda_m D_-m under the solved star.
std::vector<Scalar> d_star_factors(const DiffSO& a) {
    std::vector<Scalar> out;
    for (int i : a.labels()) out.push_back(-Scalar::q_pow(-a.N()) * a.d_scale[a.R.position(-i)].inverse());
    return out;
}

// The x-star rescaled by nu_m = lambda_-m^-1 (so nu_m nu_-m = 1), with the
// derivative star rescaled to match; under it every lambda is 1.
PresentationPtr rescaled_star(const DiffSO& a, std::vector<Scalar>* x_scale = nullptr) {
    auto lambda = d_star_factors(a);
    std::size_t n = a.labels().size();
    std::vector<Scalar> xs(n), ds(n);
    for (std::size_t m = 0; m < n; ++m) {
        Scalar nu = lambda[a.R.position(-a.labels()[m])].inverse();
        xs[m] = a.x_scale[m] * nu;
        ds[m] = a.d_scale[m] * nu.inverse();
    }
    if (x_scale) *x_scale = xs;
    return a.with_star(xs, ds);
}

}  // namespace

SoqReport rmatrix_checks(const RMatrix& r, const ProjectorSet& p, const Metric& g) {
    SoqReport rep;
    RMatrix copy = r;
    auto v = validate_rmatrix(copy);
    rep.add("braid identity", v.braid, v.braid ? "0" : "nonzero");
    rep.add("cubic characteristic identity", v.cubic, v.cubic ? "0" : "nonzero");
    rep.add("R-matrix invertible", v.invertible, v.invertible ? "0" : "singular");
    auto pc = check_projectors(r, p);
    rep.add("projectors idempotent", pc.idempotent, pc.idempotent ? "0" : "nonzero");
    rep.add("projectors mutually orthogonal", pc.orthogonal, pc.orthogonal ? "0" : "nonzero");
    rep.add("projectors sum to identity", pc.complete, pc.complete ? "0" : "nonzero");
    rep.add("spectral reconstruction of R", pc.reconstructs, pc.reconstructs ? "0" : "nonzero");
    std::size_t rank = exact_rank(p.P_zero);
    rep.add("P0 has rank one", rank == 1, "rank " + std::to_string(rank));
    bool fac = metric_reconstructs(p.P_zero, g);
    rep.add("P0 = c g^{ij} g_{kl}", fac, fac ? "0" : "nonzero");
    auto n = g.g_lower.size();
    bool inv = g.g_lower * g.g_upper == ScalarMatrix::identity(n);
    rep.add("g_upper inverts g_lower", inv, inv ? "0" : "nonzero");
    rep.notes.push_back("metric constant c = " + g.c.to_string());
    return rep;
}

SoqReport structure_checks(const DiffSO& a) {
    SoqReport rep;
    auto confluent = [&](const std::string& name, const Presentation& pres, std::size_t maxlen) {
        auto amb = freealg::overlap_check(pres, maxlen);
        std::string res = amb.empty() ? "0" : std::to_string(amb.size()) + " unresolved, first at " +
                                                   freealg::word_text(amb.front().word, pres);
        rep.add(name, amb.empty(), res);
    };
    confluent("quantum plane confluent (maxlen 4)", *a.x_sector, 4);
    confluent("derivative relations confluent (maxlen 4)", *a.d_sector, 4);
    confluent("coordinates, derivatives and Lam confluent (maxlen 4)", *a.conj_sector, 4);
    confluent("full algebra confluent (maxlen 3)", *a.full, 3);

    const auto& pres = *a.full;
    rep.add("derivative star unique in search window", a.d_scale_solutions == 1,
            std::to_string(a.d_scale_solutions) + " solutions");
    for (std::size_t m = 0; m < a.labels().size(); ++m) {
        int l = a.labels()[m];
        rep.notes.push_back("star(" + coordinate_name(l) + ") = " + a.x_scale[m].to_string() + " " +
                            coordinate_name(-l) + ", star(" + derivative_name(l) + ") = " +
                            a.d_scale[m].to_string() + " " + conjugate_derivative_name(-l));
    }
    if (!a.transcribed_star_failure.empty())
        rep.notes.push_back("the transcribed star d_m -> -q^-N sum_i g_{mi} dh_i breaks rule '" +
                            a.transcribed_star_failure + "'");
    std::string broken = first_broken_rule(pres);
    rep.add("star preserves every rule", broken.empty(), broken.empty() ? "0" : "breaks " + broken);
    for (freealg::GenId gid = 0; gid < pres.generator_count(); ++gid) {
        Element gen = Element::generator(gid);
        Element back = freealg::apply_star(pres, freealg::apply_star(pres, gen)) - gen;
        add_zero(rep, "star(star(" + pres.generator_name(gid) + ")) = " + pres.generator_name(gid), back, pres);
    }
    return rep;
}

SoqReport centrality_checks(const DiffSO& a) {
    SoqReport rep;
    Element L = a.L(), Delta = a.Delta();
    for (int k : a.labels()) {
        add_zero(rep, "[L, x^" + lab(k) + "] = 0", normal_form(freealg::commutator(L, a.x(k)), *a.x_sector),
                 *a.full);
    }
    add_zero(rep, "[L, L] = 0", normal_form(freealg::commutator(L, L), *a.x_sector), *a.full);
    for (int k : a.labels()) {
        add_zero(rep, "[Delta, d_" + lab(k) + "] = 0",
                 normal_form(freealg::commutator(Delta, a.d(k)), *a.d_sector), *a.full);
    }
    rep.notes.push_back("L = " + freealg::to_text(normal_form(L, *a.x_sector), *a.full) +
                        " and Delta = " + freealg::to_text(normal_form(Delta, *a.d_sector), *a.full) +
                        ", without the (1 + q^(N-2))^-1 prefactor");
    return rep;
}

SoqReport verify_qconjr_and_D(const DiffSO& a) {
    SoqReport rep;
    const auto& cs = *a.conj_sector;
    const auto& full = *a.full;
    const auto& labels = a.labels();

    // Off-diagonal defects vanish; the diagonal ones agree and give Lam.
    for (int k : labels)
        for (int j : labels)
            if (k != j)
                add_zero(rep, "conjugated action of substitute k=" + lab(k) + ", j=" + lab(j),
                         a.conj_action_defect(k, j), full);
    Element lam = a.conj_action_defect(labels.front(), labels.front());
    for (int k : labels) {
        if (k == labels.front()) continue;
        add_zero(rep, "Lam realization independent of k=" + lab(k), a.conj_action_defect(k, k) - lam, full);
    }
    rep.add("Lam realization has constant term 1", lam.constant() == Scalar(1), lam.constant().to_string());
    for (int m : labels) {
        add_zero(rep, "Lam realization: Lam x^" + lab(m) + " = q^2 x^" + lab(m) + " Lam",
                 normal_form(lam * a.x(m) - Scalar::q_pow(2) * (a.x(m) * lam), cs), full);
        add_zero(rep, "Lam realization: Lam d_" + lab(m) + " = q^-2 d_" + lab(m) + " Lam",
                 normal_form(lam * a.d(m) - Scalar::q_pow(-2) * (a.d(m) * lam), cs), full);
    }
    rep.notes.push_back("Lam realized as " + freealg::to_text(lam, full));

    // The cross rule of the full algebra, with the substitute for dh.
    for (int ai : labels)
        for (int bi : labels) {
            Element rhs;
            std::size_t pa = a.R.position(ai), pb = a.R.position(bi);
            for (int c : labels)
                for (int d : labels) {
                    const Scalar& m = a.R.at(pb, pa, a.R.position(d), a.R.position(c));
                    if (!m.is_zero()) rhs += (Scalar::q() * m) * (a.d(c) * a.conj_substitute(d));
                }
            add_zero(rep, "cross relation with substitute a=" + lab(ai) + ", b=" + lab(bi),
                     normal_form(a.conj_substitute(ai) * a.d(bi) - rhs, cs), full);
        }

    // Same relations for the substitutes of dh.
    auto n = static_cast<std::size_t>(a.N());
    const auto& Pm = a.projectors.P_minus;
    auto minus_relation = [&](std::size_t col, auto gen) {
        Scalar common(1);
        for (std::size_t row = 0; row < n * n; ++row) {
            const Scalar& den = Pm(row, col).den();
            common = coeff::exact_divide(common * den, coeff::gcd(common, den));
        }
        Element sum;
        for (std::size_t row = 0; row < n * n; ++row) {
            const RatFunc& c = Pm(row, col);
            if (c.is_zero()) continue;
            Scalar coef = coeff::exact_divide(c.num() * common, c.den());
            sum += coef * (gen(labels[row % n]) * gen(labels[row / n]));
        }
        return sum;
    };
    auto kl = [&](std::size_t col) { return lab(labels[col / n]) + lab(labels[col % n]); };
    for (std::size_t col = 0; col < n * n; ++col)
        add_zero(rep, "substitute relations sum P^-{ij}_{" + kl(col) + "} dh_j dh_i = 0",
                 normal_form(minus_relation(col, [&](int l) { return a.conj_substitute(l); }), cs), full);

    // star(D_i) = -D_-i, first with the metric star on x.
    auto lambda = d_star_factors(a);
    for (std::size_t m = 0; m < n; ++m) {
        int i = labels[m];
        Element sD = freealg::apply_star(full, a.D(i));
        add_zero(rep, "star(D_" + lab(i) + ") = -D_" + lab(-i), normal_form(sD + a.D(-i), full), full);
    }
    for (std::size_t m = 0; m < n; ++m) {
        int i = labels[m];
        Element sD = freealg::apply_star(full, a.D(i));
        add_zero(rep, "star(D_" + lab(i) + ") = -(" + lambda[m].to_string() + ") D_" + lab(-i),
                 normal_form(sD + lambda[m] * a.D(-i), full), full);
    }
    std::vector<Scalar> xs;
    auto rescaled = rescaled_star(a, &xs);
    std::string broken = first_broken_rule(*rescaled);
    rep.add("rescaled star preserves every rule", broken.empty(), broken.empty() ? "0" : "breaks " + broken);
    for (std::size_t m = 0; m < n; ++m) {
        int i = labels[m];
        Element sD = freealg::apply_star(*rescaled, a.D(i));
        add_zero(rep, "rescaled star(D_" + lab(i) + ") = -D_" + lab(-i), normal_form(sD + a.D(-i), full), full);
        rep.notes.push_back("rescaled star(" + coordinate_name(i) + ") = " + xs[m].to_string() + " " +
                            coordinate_name(-i));
    }

    for (std::size_t col = 0; col < n * n; ++col) {
        add_zero(rep, "sum P^-{ij}_{" + kl(col) + "} D_j D_i = 0",
                 normal_form(minus_relation(col, [&](int l) { return a.D(l); }), full), full);
    }
    return rep;
}

SoqReport compute_r_and_verify_r1(const DiffSO& a) {
    SoqReport rep;
    const auto& full = *a.full;
    auto lambda = d_star_factors(a);
    auto rescaled = rescaled_star(a);
    for (int i : a.labels()) {
        Element ri = a.r(i), rti = a.r_tilde(i), rmi = a.r(-i);
        int e = a.r_exponent(i);
        std::string tag = i == 0 ? " (exponent 1 for the middle index, derived)" : "";
        std::string lhs_text = "q^-" + lab(e) + " star(r_" + lab(-i) + ")";
        Element lhs = Scalar::q_pow(-e) * freealg::apply_star(full, rmi);
        add_zero(rep, lhs_text + " = r~_" + lab(i) + tag, normal_form(lhs - rti, full), full);
        Element lhs_rescaled = Scalar::q_pow(-e) * freealg::apply_star(*rescaled, rmi);
        add_zero(rep, lhs_text + " = r~_" + lab(i) + " under rescaled star" + tag,
                 normal_form(lhs_rescaled - rti, full), full);
        // star(r_-i) = f (q^e D_i x^i - x^i D_i) with f = x_scale[-i] lambda[-i].
        std::size_t mi = a.R.position(-i);
        Scalar f = a.x_scale[mi] * lambda[mi];
        add_zero(rep, lhs_text + " = (" + f.to_string() + ") r~_" + lab(i) + tag,
                 normal_form(lhs - f * rti, full), full);
        add_zero(rep, "same factor under rescaled star, i=" + lab(i), normal_form(lhs_rescaled - f * rti, full),
                 full);
        rep.notes.push_back("r_" + lab(i) + " = " + freealg::to_text(ri, full));
        rep.notes.push_back("r~_" + lab(i) + " = " + freealg::to_text(rti, full));
        rep.notes.push_back("u_" + lab(i) + "^-" + lab(e) + " rho_" + lab(i) + " := r_" + lab(i) + " (rho_" +
                            lab(i) + " uninterpreted)");
    }
    return rep;
}

SoqReport run_soq_suite(const std::filesystem::path& rmatrix_file) {
    RMatrix r = load_and_validate_rmatrix(rmatrix_file);
    ProjectorSet p = spectral_projectors(r);
    Metric g = extract_metric(p.P_zero, r.N);
    SoqReport rep = rmatrix_checks(r, p, g);
    DiffSO a = build_diff_presentation(r, p, g);
    rep.append(structure_checks(a));
    rep.append(centrality_checks(a));
    rep.append(verify_qconjr_and_D(a));
    rep.append(compute_r_and_verify_r1(a));
    return rep;
}

}  // namespace qweyl::soq
