#include "ssl/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "ssl/analysis.hpp"
#include "ssl/association.hpp"
#include "ssl/certify.hpp"
#include "ssl/cliques.hpp"
#include "ssl/eigen.hpp"

namespace ssl {

namespace {

Json vertex_set_json(const VertexSet& s) {
    Json arr = Json::array();
    for (int v : s) arr.push(v);
    return arr;
}

Json int_list_json(const std::vector<int>& s) {
    Json arr = Json::array();
    for (int v : s) arr.push(v);
    return arr;
}

struct PipelineState {
    const Graph& g;
    const AnalyzeOptions& opts;
    Json report = Json::object();
    std::vector<std::string> violations;
    bool hypothesis_ok = false;
    // the quasi-clique bounds of the theorem are only implied for the
    // defaulted m = m_lambda(lambda) with n at or above the (m+1)^2 floor
    bool theorem_applicable = false;
};

void add_input_digest(PipelineState& st, const std::string& name, const std::string& format,
                      const HoffmanGraph* h) {
    Json in = Json::object();
    in.set("path", name);
    in.set("format", format);
    in.set("vertices", st.g.vertex_count());
    in.set("edges", st.g.edge_count());
    if (h != nullptr) {
        in.set("slim_vertices", h->slim_count);
        in.set("fat_vertices", h->fat_count);
    }
    int k = st.g.regular_degree();
    in.set("regular", k >= 0);
    in.set("degree", k >= 0 ? Json(k) : Json(nullptr));
    st.report.set("input", std::move(in));
}

void run_eigen_stage(PipelineState& st) {
    EigenResult eig = lambda_min(st.g, st.opts.tolerance);
    PsdCertificate cert = certify_graph_lambda_min_at_least(st.g, st.opts.lambda);
    st.hypothesis_ok = cert.psd;

    Json lm = Json::object();
    lm.set("value", eig.value);
    lm.set("tolerance", eig.tolerance);
    lm.set("certified_at_least", -static_cast<long long>(st.opts.lambda));
    lm.set("certified", cert.psd);
    lm.set("exact_certificate", true);
    if (!cert.psd) {
        lm.set("certificate_failure", cert.fail_reason);
    }
    st.report.set("lambda_min", std::move(lm));
    st.report.set("hypothesis_ok", st.hypothesis_ok);
    if (!st.hypothesis_ok) st.report.set("hypothesis_note", "hypothesis violated: "
        "lambda_min < -lambda; checks are profiled but not counted as violations");
}

int resolve_m(PipelineState& st, bool enforce_floor) {
    int m;
    bool defaulted = !st.opts.m.has_value();
    m = defaulted ? m_lambda(st.opts.lambda) : *st.opts.m;
    if (m < 1) throw std::invalid_argument("analyze: m must be >= 1");
    if (enforce_floor && st.opts.n < (m + 1) * (m + 1) && !st.opts.allow_small_n)
        throw std::invalid_argument(
            "analyze: n = " + std::to_string(st.opts.n) + " is below (m+1)^2 = " +
            std::to_string((m + 1) * (m + 1)) + "; pass the small-n override to proceed");
    st.theorem_applicable = defaulted && st.opts.n >= (m + 1) * (m + 1);

    Json params = Json::object();
    params.set("lambda", st.opts.lambda);
    params.set("n", st.opts.n);
    params.set("m", m);
    params.set("m_source", defaulted ? "m_lambda" : "user");
    params.set("eig_tolerance", st.opts.tolerance);
    params.set("theorem_bounds_implied", st.theorem_applicable);
    st.report.set("parameters", std::move(params));
    return m;
}

void run_ktilde_stage(PipelineState& st, int m) {
    Json kt = Json::object();
    if (st.opts.skip_ktilde) {
        kt.set("checked", false);
    } else {
        KtildeSearch ks = check_ktilde_free(st.g, m);
        kt.set("checked", true);
        kt.set("free", ks.free);
        if (!ks.free) {
            kt.set("witness", vertex_set_json(ks.witness));
            if (st.hypothesis_ok && st.theorem_applicable)
                st.violations.push_back(
                    "induced K~_{2m} found although lambda_min >= -lambda is certified and "
                    "m = m(lambda)");
        }
    }
    st.report.set("ktilde_check", std::move(kt));
}

void run_family_checks(PipelineState& st, const std::vector<VertexSet>& family,
                       const HoffmanGraph& hoffman, bool family_from_theorem) {
    const int lam = st.opts.lambda;

    // fat degrees: no induced h^(lambda+1)
    {
        int max_fat_degree = 0;
        for (int v = 0; v < hoffman.slim_count; ++v)
            max_fat_degree = std::max(max_fat_degree,
                                      static_cast<int>(hoffman.fat_neighbors(v).size()));
        Json fd = Json::object();
        fd.set("max_slim_fat_degree", max_fat_degree);
        fd.set("bound", lam);
        bool ok = max_fat_degree <= lam;
        fd.set("ok", ok);
        st.report.set("fat_degree", std::move(fd));
        if (!ok && st.hypothesis_ok && family_from_theorem)
            st.violations.push_back("slim vertex with more than lambda fat neighbors");
    }

    // quasi-clique complement valency and pairwise intersections
    {
        const long long comp_bound = static_cast<long long>(lam - 1) * (lam - 1);
        int max_comp_degree = 0;
        for (const auto& q : family) {
            Graph comp = complement(induced(st.g, q));
            for (int v = 0; v < comp.vertex_count(); ++v)
                max_comp_degree = std::max(max_comp_degree, comp.degree(v));
        }
        int max_intersection = 0;
        for (size_t i = 0; i < family.size(); ++i) {
            for (size_t j = i + 1; j < family.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(family[i].begin(), family[i].end(), family[j].begin(),
                                      family[j].end(), std::back_inserter(common));
                max_intersection = std::max(max_intersection, static_cast<int>(common.size()));
            }
        }
        Json qc = Json::object();
        qc.set("count", static_cast<long long>(family.size()));
        qc.set("max_complement_degree", max_comp_degree);
        qc.set("complement_degree_bound", comp_bound);
        bool comp_ok = max_comp_degree <= comp_bound;
        qc.set("complement_ok", comp_ok);
        qc.set("max_pairwise_intersection", max_intersection);
        qc.set("intersection_bound", static_cast<long long>(lam - 1));
        bool inter_ok = max_intersection <= lam - 1;
        qc.set("intersection_ok", inter_ok);
        st.report.set("quasi_clique_checks", std::move(qc));
        if (st.hypothesis_ok && family_from_theorem) {
            if (!comp_ok)
                st.violations.push_back("quasi-clique complement valency exceeds (lambda-1)^2");
            if (!inter_ok)
                st.violations.push_back("quasi-clique intersection exceeds lambda-1");
        }
    }
}

void run_dichotomies(PipelineState& st, const std::vector<VertexSet>& cliques,
                     const std::vector<VertexSet>& family) {
    const int lam = st.opts.lambda;
    {
        Json cd = Json::object();
        cd.set("threshold", clique_threshold(lam));
        int applicable = 0, holds = 0;
        Json failures = Json::array();
        for (const auto& c : cliques) {
            AttachmentProfile pr = verify_clique_dichotomy(st.g, c, lam);
            if (pr.verdict == Verdict::not_applicable) continue;
            ++applicable;
            if (pr.verdict == Verdict::holds) {
                ++holds;
            } else {
                Json f = Json::object();
                f.set("clique", vertex_set_json(c));
                f.set("middle_band", int_list_json(pr.middle_band));
                failures.push(std::move(f));
                if (st.hypothesis_ok)
                    st.violations.push_back("clique attachment dichotomy failed");
            }
        }
        cd.set("checked", static_cast<long long>(cliques.size()));
        cd.set("applicable", applicable);
        cd.set("holds", holds);
        cd.set("failures", std::move(failures));
        st.report.set("clique_dichotomy", std::move(cd));
    }
    {
        const int t = (lam - 1) * (lam - 1) + 1;
        Json pd = Json::object();
        pd.set("t", t);
        pd.set("threshold", plex_threshold(lam, t));
        int checked = 0, applicable = 0, holds = 0;
        Json failures = Json::array();
        for (const auto& q : family) {
            if (q.empty() || plex_parameter(st.g, q) > t) continue;
            AttachmentProfile pr = verify_plex_dichotomy(st.g, q, t, lam);
            ++checked;
            if (pr.verdict == Verdict::not_applicable) continue;
            ++applicable;
            if (pr.verdict == Verdict::holds) {
                ++holds;
            } else {
                Json f = Json::object();
                f.set("plex", vertex_set_json(q));
                f.set("middle_band", int_list_json(pr.middle_band));
                failures.push(std::move(f));
                if (st.hypothesis_ok)
                    st.violations.push_back("plex attachment dichotomy failed");
            }
        }
        pd.set("checked", checked);
        pd.set("applicable", applicable);
        pd.set("holds", holds);
        pd.set("failures", std::move(failures));
        st.report.set("plex_dichotomy", std::move(pd));
    }
}

void run_theorem_stage(PipelineState& st, const std::vector<VertexSet>& family) {
    const int lam = st.opts.lambda;
    const int plex_t = (lam - 1) * (lam - 1) + 1;
    Json tp = Json::object();
    bool all_plexes = true;
    for (const auto& q : family)
        if (q.empty() || plex_parameter(st.g, q) > plex_t) all_plexes = false;
    tp.set("plex_t", plex_t);
    tp.set("family_size", static_cast<long long>(family.size()));
    tp.set("all_family_members_are_plexes", all_plexes);
    if (family.empty() || !all_plexes) {
        tp.set("evaluated", false);
        Json p3 = Json::object();
        p3.set("ok", false);
        p3.set("note", family.empty() ? "no plex family" : "family member is not a plex");
        tp.set("iii", std::move(p3));
        st.report.set("theorem_properties", std::move(tp));
        return;
    }
    TheoremReport rep = verify_theorem_properties(st.g, lam, family, st.opts.n);
    tp.set("evaluated", true);
    Json p1 = Json::object();
    p1.set("ok", rep.multiplicity_ok);
    p1.set("min_multiplicity", rep.min_multiplicity);
    p1.set("max_multiplicity", rep.max_multiplicity);
    p1.set("bound", lam);
    tp.set("i", std::move(p1));
    Json p2 = Json::object();
    p2.set("measured_max_uncovered_neighbors", rep.max_uncovered_neighbors);
    tp.set("ii", std::move(p2));
    Json p3 = Json::object();
    p3.set("ok", rep.order_ok);
    p3.set("min_order", rep.min_order);
    p3.set("bound_n", st.opts.n);
    tp.set("iii", std::move(p3));
    Json p4 = Json::object();
    p4.set("ok", rep.intersection_ok);
    p4.set("max_intersection", rep.max_intersection);
    p4.set("bound", lam - 1);
    tp.set("iv", std::move(p4));
    Json p5 = Json::object();
    p5.set("ok", rep.attachment_ok);
    p5.set("max_outside_attachment", rep.max_outside_attachment);
    p5.set("bound", static_cast<long long>(plex_t) * lam * (lam - 1));
    tp.set("v", std::move(p5));
    st.report.set("theorem_properties", std::move(tp));
}

void run_ratio_stage(PipelineState& st) {
    if (st.g.regular_degree() < 0 || st.g.vertex_count() == 0) {
        st.report.set("clique_ratio", Json(nullptr));
        return;
    }
    CliqueRatioReport rep = clique_ratio_report(st.g, st.opts.lambda);
    Json cr = Json::object();
    cr.set("degree", rep.degree);
    cr.set("min_clique_order", rep.min_order);
    cr.set("avg_clique_order", rep.avg_order);
    cr.set("min_ratio", rep.min_ratio);
    cr.set("corollary_denominator", rep.corollary_denominator);
    st.report.set("clique_ratio", std::move(cr));
}

AnalyzeOutcome finish(PipelineState& st) {
    Json v = Json::array();
    for (const auto& s : st.violations) v.push(s);
    st.report.set("violations", std::move(v));
    int code = st.violations.empty() ? 0 : 2;
    st.report.set("exit_code", code);
    return AnalyzeOutcome{std::move(st.report), code};
}

void validate_common(const AnalyzeOptions& opts) {
    if (opts.lambda < 1) throw std::invalid_argument("analyze: lambda must be >= 1");
    if (opts.n < 1) throw std::invalid_argument("analyze: n must be >= 1");
    if (opts.tolerance <= 0) throw std::invalid_argument("analyze: tolerance must be > 0");
}

}  // namespace

AnalyzeOutcome analyze_graph(const Graph& g, const AnalyzeOptions& opts,
                             const std::string& input_name) {
    validate_common(opts);
    PipelineState st{g, opts, Json::object(), {}, false, false};
    st.report.set("schema", "sslgraph-report/1");
    add_input_digest(st, input_name, "edgelist", nullptr);
    run_eigen_stage(st);
    int m = resolve_m(st, /*enforce_floor=*/true);
    run_ktilde_stage(st, m);

    AssociatedHoffman ah;
    try {
        ah = associated_hoffman(g, m, opts.n, opts.allow_small_n);
    } catch (const std::runtime_error& e) {
        // equivalence/well-definedness failures are counterexample candidates
        st.violations.push_back(e.what());
        Json cc = Json::object();
        cc.set("error", std::string(e.what()));
        st.report.set("clique_classes", std::move(cc));
        return finish(st);
    }

    {
        Json cc = Json::object();
        cc.set("clique_count", static_cast<long long>(ah.classes.cliques.size()));
        cc.set("class_count", static_cast<long long>(ah.classes.classes.size()));
        Json orders = Json::array();
        for (const auto& c : ah.classes.cliques) orders.push(static_cast<long long>(c.size()));
        cc.set("clique_orders", std::move(orders));
        Json qorders = Json::array();
        Json plexps = Json::array();
        for (const auto& q : ah.classes.quasi_cliques) {
            qorders.push(static_cast<long long>(q.size()));
            plexps.push(q.empty() ? Json(nullptr) : Json(plex_parameter(g, q)));
        }
        cc.set("quasi_clique_orders", std::move(qorders));
        cc.set("quasi_clique_plex_parameters", std::move(plexps));
        cc.set("no_classes", ah.no_classes);
        st.report.set("clique_classes", std::move(cc));
    }

    if (ah.no_classes) {
        st.report.set("note", "no maximal cliques of order >= n: the associated Hoffman "
                              "graph has no fat vertices and the plex family is empty");
        run_ratio_stage(st);
        return finish(st);
    }

    run_family_checks(st, ah.classes.quasi_cliques, ah.hoffman, st.theorem_applicable);
    run_dichotomies(st, ah.classes.cliques, ah.classes.quasi_cliques);
    run_theorem_stage(st, ah.classes.quasi_cliques);
    run_ratio_stage(st);
    return finish(st);
}

AnalyzeOutcome analyze_hoffman(const HoffmanGraph& h, const AnalyzeOptions& opts,
                               const std::string& input_name) {
    validate_common(opts);
    require_valid(h);
    const Graph g = slim_graph(h);
    PipelineState st{g, opts, Json::object(), {}, false, false};
    st.report.set("schema", "sslgraph-report/1");
    add_input_digest(st, input_name, "hoffman", &h);
    run_eigen_stage(st);
    // the file's own fats supply the plex family; no clique classes are
    // computed, so the (m+1)^2 floor on n does not bind
    int m = resolve_m(st, /*enforce_floor=*/false);
    run_ktilde_stage(st, m);

    std::vector<VertexSet> family;
    for (int f = h.slim_count; f < h.total(); ++f) family.push_back(quasi_clique(h, f));
    {
        Json pf = Json::object();
        pf.set("source", "hoffman-file fats");
        pf.set("count", static_cast<long long>(family.size()));
        Json qorders = Json::array();
        Json plexps = Json::array();
        for (const auto& q : family) {
            qorders.push(static_cast<long long>(q.size()));
            plexps.push(q.empty() ? Json(nullptr) : Json(plex_parameter(g, q)));
        }
        pf.set("quasi_clique_orders", std::move(qorders));
        pf.set("quasi_clique_plex_parameters", std::move(plexps));
        st.report.set("plex_family", std::move(pf));
    }
    if (family.empty()) {
        st.report.set("note", "hoffman input has no fat vertices; plex family is empty");
        run_ratio_stage(st);
        return finish(st);
    }

    // user-provided families are profiled; only the unconditional dichotomy
    // lemmas count as violations here
    run_family_checks(st, family, h, /*family_from_theorem=*/false);
    long long big = clique_threshold(opts.lambda);
    long long n_min = std::max<long long>(opts.n, std::min<long long>(big, g.vertex_count() + 1));
    run_dichotomies(st, maximal_cliques_at_least(g, static_cast<int>(n_min)), family);
    run_theorem_stage(st, family);
    run_ratio_stage(st);
    return finish(st);
}

}  // namespace ssl
