// finmet: computational metric geometry on finite metric spaces.
//
// Subcommands ingest distance matrices (text or JSON) or planar CSV
// clouds and emit deterministic JSON or text reports. Exit codes:
// 0 success, 1 domain violation (invalid metric or infeasible request),
// 2 usage error (bad flags, unreadable or malformed input).

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "finmet/generators.hpp"
#include "finmet/gromov_hausdorff.hpp"
#include "finmet/hausdorff.hpp"
#include "finmet/injective.hpp"
#include "finmet/io.hpp"
#include "finmet/metric_space.hpp"
#include "finmet/nets.hpp"
#include "finmet/planar.hpp"
#include "finmet/trees.hpp"
#include "finmet/urysohn.hpp"

namespace {

using namespace finmet;

struct Options {
    std::string format = "json";
    double tol = 1e-9;
    double eps = 0.0;
    uint64_t seed = 0;
    int64_t budget = 1'000'000;
    int pack_limit = 20;
    double cap = 1.0;
    int trials = 100;
    int steps = 0;
    bool hulls = false;
    bool prime = false;
    std::string a_list, b_list;
    std::vector<std::string> inputs;
};

FiniteMetricSpace load_space(const std::string& path) {
    const std::string text = read_file_or_stdin(path);
    ParsedInput in = parse_space_text(text);
    if (!std::holds_alternative<FiniteMetricSpace>(in))
        throw ParseError("expected a distance matrix, got a planar cloud", 1, 1);
    return std::get<FiniteMetricSpace>(std::move(in));
}

FiniteMetricSpace load_valid_space(const std::string& path, double tol) {
    FiniteMetricSpace s = load_space(path);
    const ValidationReport rep = validate(s, tol, false, 0);
    if (!rep.ok)
        throw std::invalid_argument(std::string("input is not a metric: ") +
                                    axiom_name(rep.violations.front().axiom) + " violated");
    return s;
}

PlanarCloud load_cloud(const std::string& path) {
    return parse_cloud_csv(read_file_or_stdin(path));
}

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            size_t used = 0;
            out.push_back(std::stoi(cur, &used));
            if (used != cur.size()) throw std::invalid_argument("");
        } catch (...) {
            throw ParseError("bad index '" + cur + "' in list", 1, 1);
        }
        cur.clear();
    };
    for (char c : s) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    if (out.empty()) throw ParseError("empty index list", 1, 1);
    return out;
}

void emit(const std::string& s) { std::fwrite(s.data(), 1, s.size(), stdout); }

void arr_of_ints(JsonBuilder& jb, const std::vector<int>& v) {
    jb.begin_arr();
    for (int i : v) jb.value_int(i);
    jb.end_arr();
}

void arr_of_nums(JsonBuilder& jb, const std::vector<double>& v) {
    jb.begin_arr();
    for (double x : v) jb.value_num(x);
    jb.end_arr();
}

int cmd_validate(const Options& o) {
    const std::string text = read_file_or_stdin(o.inputs[0]);
    ParsedInput in = parse_space_text(text);
    if (!std::holds_alternative<FiniteMetricSpace>(in))
        throw ParseError("expected a distance matrix", 1, 1);
    const FiniteMetricSpace s = std::get<FiniteMetricSpace>(std::move(in));
    const ValidationReport rep = validate(s, o.tol);
    if (o.format == "text") {
        std::string out = rep.ok ? "ok\n" : "invalid\n";
        for (const auto& v : rep.violations) {
            out += "violation: " + std::string(axiom_name(v.axiom)) + " at (" + std::to_string(v.i) + "," +
                   std::to_string(v.j) + "," + std::to_string(v.k) + ") defect " + format_double(v.defect) +
                   "\n";
        }
        if (rep.quadrilateral.checked)
            out += std::string("quadrilateral: ") + (rep.quadrilateral.ok ? "ok" : "violated") + "\n";
        emit(out);
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("validate");
        jb.key("ok").value_bool(rep.ok);
        jb.key("violations").begin_arr();
        for (const auto& v : rep.violations) {
            jb.begin_obj();
            jb.key("axiom").value_str(axiom_name(v.axiom));
            jb.key("witness").begin_arr();
            jb.value_int(v.i);
            jb.value_int(v.j);
            jb.value_int(v.k);
            jb.end_arr();
            jb.key("defect").value_num(v.defect);
            jb.end_obj();
        }
        jb.end_arr();
        jb.key("quadrilateral").begin_obj();
        jb.key("checked").value_bool(rep.quadrilateral.checked);
        jb.key("ok").value_bool(rep.quadrilateral.ok);
        jb.key("max_defect").value_num(rep.quadrilateral.max_defect);
        jb.end_obj();
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return rep.ok ? 0 : 1;
}

int cmd_quotient(const Options& o) {
    const FiniteMetricSpace s = load_space(o.inputs[0]);
    const QuotientResult q = quotient_pseudometric(s.rows(), o.tol);
    if (o.format == "text") {
        std::string out = "classes " + std::to_string(q.classes.size()) + "\n";
        for (const auto& c : q.classes) {
            out += "class:";
            for (int i : c) out += " " + std::to_string(i);
            out += "\n";
        }
        out += emit_matrix_text(q.space);
        emit(out);
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("quotient");
        jb.key("classes").begin_arr();
        for (const auto& c : q.classes) arr_of_ints(jb, c);
        jb.end_arr();
        jb.key("space").begin_obj();
        emit_matrix_fields(jb, q.space);
        jb.end_obj();
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_components(const Options& o) {
    const FiniteMetricSpace s = load_valid_space(o.inputs[0], o.tol);
    const std::vector<MetricComponent> comps = metric_components(s, o.tol);
    if (o.format == "text") {
        std::string out = "components " + std::to_string(comps.size()) + "\n";
        for (const auto& c : comps) {
            out += "component:";
            for (int i : c.indices) out += " " + std::to_string(i);
            out += "\n";
        }
        emit(out);
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("components");
        jb.key("count").value_int(static_cast<long long>(comps.size()));
        jb.key("components").begin_arr();
        for (const auto& c : comps) {
            jb.begin_obj();
            jb.key("indices");
            arr_of_ints(jb, c.indices);
            jb.key("space").begin_obj();
            emit_matrix_fields(jb, c.space);
            jb.end_obj();
            jb.end_obj();
        }
        jb.end_arr();
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_net(const Options& o) {
    const FiniteMetricSpace s = load_valid_space(o.inputs[0], o.tol);
    const PackingCertificate cert = greedy_packing(s, o.eps, o.seed);
    const NetCheck chk = is_eps_net(s, cert.points, o.eps);
    if (o.format == "text") {
        std::string out = "count " + std::to_string(cert.points.size()) + "\npoints:";
        for (int i : cert.points.indices) out += " " + std::to_string(i);
        out += "\nis_net " + std::string(chk.ok ? "true" : "false") + "\n";
        emit(out);
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("net");
        jb.key("eps").value_num(o.eps);
        jb.key("count").value_int(cert.points.size());
        jb.key("points");
        arr_of_ints(jb, cert.points.indices);
        jb.key("kind").value_str(packing_kind_name(cert.kind));
        jb.key("is_net").value_bool(chk.ok);
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_pack(const Options& o) {
    const FiniteMetricSpace s = load_valid_space(o.inputs[0], o.tol);
    const PackingNumber p = packing_number(s, o.eps, o.pack_limit);
    if (o.format == "text") {
        emit("pack " + std::to_string(p.count) + " (" + packing_kind_name(p.kind) + ")\n");
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("pack");
        jb.key("eps").value_num(o.eps);
        jb.key("count").value_int(p.count);
        jb.key("kind").value_str(packing_kind_name(p.kind));
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_tree(const Options& o) {
    const FiniteMetricSpace s = load_valid_space(o.inputs[0], o.tol);
    const DefectWitness w = four_point_defect(s);
    if (o.format == "text") {
        emit("four_point_defect " + std::string(format_double(w.value)) + "\n");
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("tree");
        jb.key("four_point_defect").value_num(w.value);
        jb.key("witness").begin_arr();
        for (int i : w.witness) jb.value_int(i);
        jb.end_arr();
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_ultra(const Options& o) {
    const FiniteMetricSpace s = load_valid_space(o.inputs[0], o.tol);
    const DefectWitness w = ultrametric_defect(s);
    if (o.format == "text") {
        emit("ultrametric_defect " + std::string(format_double(w.value)) + "\n");
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("ultra");
        jb.key("ultrametric_defect").value_num(w.value);
        jb.key("witness").begin_arr();
        jb.value_int(w.witness[0]);
        jb.value_int(w.witness[1]);
        jb.value_int(w.witness[2]);
        jb.end_arr();
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_hausdorff(const Options& o) {
    const FiniteMetricSpace s = load_valid_space(o.inputs[0], o.tol);
    const SubsetSelection A(parse_index_list(o.a_list));
    const SubsetSelection B(parse_index_list(o.b_list));
    const double h = hausdorff_distance(s, A, B);
    const double ab = directed_hausdorff(s, A, B);
    const double ba = directed_hausdorff(s, B, A);
    if (o.format == "text") {
        emit("hausdorff " + std::string(format_double(h)) + "\n");
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("hausdorff");
        jb.key("value").value_num(h);
        jb.key("directed_ab").value_num(ab);
        jb.key("directed_ba").value_num(ba);
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_planar_hausdorff(const Options& o) {
    const PlanarCloud A = load_cloud(o.inputs[0]);
    const PlanarCloud B = load_cloud(o.inputs[1]);
    const double h = planar_hausdorff(A, B, o.hulls);
    if (o.format == "text") {
        emit("planar_hausdorff " + std::string(format_double(h)) + "\n");
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("planar-hausdorff");
        jb.key("mode").value_str(o.hulls ? "hulls" : "points");
        jb.key("value").value_num(h);
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_gh(const Options& o) {
    const FiniteMetricSpace X = load_valid_space(o.inputs[0], o.tol);
    const FiniteMetricSpace Y = load_valid_space(o.inputs[1], o.tol);
    const GhResult r = gh_exact(X, Y, o.budget);
    GhPrimeResult pr;
    if (o.prime) pr = gh_prime(X, Y, o.budget);
    if (o.format == "text") {
        std::string out = "gh " + std::string(format_double(r.value)) + (r.exact ? " (exact)" : " (budget)") + "\n";
        if (o.prime) out += "gh_prime " + std::string(format_double(pr.value)) + "\n";
        emit(out);
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("gh");
        jb.key("value").value_num(r.value);
        jb.key("exact").value_bool(r.exact);
        jb.key("nodes_explored").value_int(r.nodes_explored);
        jb.key("correspondence").begin_arr();
        for (auto [i, j] : r.optimal.pairs) {
            jb.begin_arr();
            jb.value_int(i);
            jb.value_int(j);
            jb.end_arr();
        }
        jb.end_arr();
        if (o.prime) {
            jb.key("gh_prime").value_num(pr.value);
            jb.key("gh_prime_exact").value_bool(pr.exact);
        }
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_gh_bounds(const Options& o) {
    const FiniteMetricSpace X = load_valid_space(o.inputs[0], o.tol);
    const FiniteMetricSpace Y = load_valid_space(o.inputs[1], o.tol);
    const double lower = gh_lower_bound(X, Y);
    const GhResult r = gh_exact(X, Y, o.budget);
    if (o.format == "text") {
        emit("lower " + std::string(format_double(lower)) + "\nupper " + format_double(r.value) + "\n");
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("gh-bounds");
        jb.key("lower").value_num(lower);
        jb.key("upper").value_num(r.value);
        jb.key("upper_exact").value_bool(r.exact);
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_glue(const Options& o) {
    const FiniteMetricSpace X = load_valid_space(o.inputs[0], o.tol);
    const FiniteMetricSpace Y = load_valid_space(o.inputs[1], o.tol);
    const GhResult r = gh_exact(X, Y, o.budget);
    const GluedSpace g = glue_along(X, Y, r.optimal);
    const double gap =
        hausdorff_distance(g.space, SubsetSelection(g.x_indices), SubsetSelection(g.y_indices));
    if (o.format == "text") {
        emit("delta " + std::string(format_double(g.delta)) + "\nhausdorff_gap " + format_double(gap) +
             "\n" + emit_matrix_text(g.space));
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("glue");
        jb.key("gh_value").value_num(r.value);
        jb.key("delta").value_num(g.delta);
        jb.key("hausdorff_gap").value_num(gap);
        jb.key("x_indices");
        arr_of_ints(jb, g.x_indices);
        jb.key("y_indices");
        arr_of_ints(jb, g.y_indices);
        jb.key("space").begin_obj();
        emit_matrix_fields(jb, g.space);
        jb.end_obj();
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_tightspan(const Options& o) {
    const FiniteMetricSpace s = load_valid_space(o.inputs[0], o.tol);
    const std::vector<PointFunction> samples = sample_tight_span(s, o.trials, o.seed, o.tol);
    if (o.format == "text") {
        std::string out = "samples " + std::to_string(samples.size()) + "\n";
        for (const auto& f : samples) {
            for (int i = 0; i < f.size(); ++i) out += (i ? " " : "") + std::string(format_double(f[i]));
            out += "\n";
        }
        emit(out);
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("tightspan");
        jb.key("count").value_int(static_cast<long long>(samples.size()));
        jb.key("samples").begin_arr();
        for (const auto& f : samples) arr_of_nums(jb, f.values);
        jb.end_arr();
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_hyperconvex(const Options& o) {
    const FiniteMetricSpace s = load_valid_space(o.inputs[0], o.tol);
    const std::optional<PointFunction> w = hyperconvexity_witness(s, o.tol);
    if (o.format == "text") {
        if (w) {
            std::string out = "witness:";
            for (int i = 0; i < w->size(); ++i) out += " " + std::string(format_double((*w)[i]));
            emit(out + "\n");
        } else {
            emit("hyperconvex (no witness found)\n");
        }
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("hyperconvex");
        jb.key("hyperconvex").value_bool(!w.has_value());
        jb.key("witness");
        if (w) arr_of_nums(jb, w->values);
        else jb.value_null();
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_urysohn_grow(const Options& o) {
    GrowthState st;
    if (!o.inputs.empty() && o.inputs[0] != "new")
        st = parse_growth_state(read_file_or_stdin(o.inputs[0]));
    else
        st = make_growth_state(o.cap, o.seed);
    for (int i = 0; i < o.steps; ++i) grow_random_step(st);
    if (o.format == "text") {
        emit("n " + std::to_string(st.space.n) + "\ndiam " + format_double(diameter(st.space)) + "\ncap " +
             format_double(st.d_cap) + "\n");
    } else {
        emit(emit_growth_state(st));
    }
    return 0;
}

int cmd_urysohn_stats(const Options& o) {
    const GrowthState st = parse_growth_state(read_file_or_stdin(o.inputs[0]));
    const ExtensionStats es = extension_property_stats(st.space, st.d_cap, o.trials, o.tol, o.seed);
    if (o.format == "text") {
        emit("success_rate " + std::string(format_double(es.success_rate)) + "\nworst_defect " +
             format_double(es.worst_defect) + "\n");
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("urysohn-stats");
        jb.key("trials").value_int(o.trials);
        jb.key("tol").value_num(o.tol);
        jb.key("success_rate").value_num(es.success_rate);
        jb.key("worst_defect").value_num(es.worst_defect);
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

int cmd_back_and_forth(const Options& o) {
    const FiniteMetricSpace X = load_valid_space(o.inputs[0], o.tol);
    const FiniteMetricSpace Y = load_valid_space(o.inputs[1], o.tol);
    const PartialIsometry out = back_and_forth(X, Y, PartialIsometry{}, o.steps);
    if (o.format == "text") {
        std::string s = "max_defect " + std::string(format_double(out.max_defect)) + "\npairs:";
        for (auto [i, j] : out.pairs) s += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
        emit(s + "\n");
    } else {
        JsonBuilder jb;
        jb.begin_obj();
        jb.key("verb").value_str("back-and-forth");
        jb.key("pairs").begin_arr();
        for (auto [i, j] : out.pairs) {
            jb.begin_arr();
            jb.value_int(i);
            jb.value_int(j);
            jb.end_arr();
        }
        jb.end_arr();
        jb.key("max_defect").value_num(out.max_defect);
        jb.end_obj();
        jb.raw("\n");
        emit(jb.out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational metric geometry on finite metric spaces"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, int n_inputs, bool optional_input = false) {
        if (n_inputs > 0) {
            auto* opt = sub->add_option("inputs", o.inputs, "input files ('-' for stdin)");
            if (!optional_input) opt->expected(n_inputs)->required();
            else opt->expected(0, n_inputs);
        }
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--tol", o.tol, "comparison tolerance")->check(CLI::NonNegativeNumber);
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check the metric axioms");
    add_common(validate_cmd, 1);

    CLI::App* quotient_cmd = app.add_subcommand("quotient", "merge zero-distance points");
    add_common(quotient_cmd, 1);

    CLI::App* components_cmd = app.add_subcommand("components", "metric components of an inf-metric");
    add_common(components_cmd, 1);

    CLI::App* net_cmd = app.add_subcommand("net", "greedy maximal packing / eps-net");
    add_common(net_cmd, 1);
    net_cmd->add_option("--eps", o.eps, "net radius")->required()->check(CLI::PositiveNumber);
    net_cmd->add_option("--seed", o.seed, "start-point seed");

    CLI::App* pack_cmd = app.add_subcommand("pack", "packing number");
    add_common(pack_cmd, 1);
    pack_cmd->add_option("--eps", o.eps, "separation")->required()->check(CLI::PositiveNumber);
    pack_cmd->add_option("--budget", o.pack_limit, "exact-search size limit")->check(CLI::PositiveNumber);

    CLI::App* tree_cmd = app.add_subcommand("tree", "four-point (tree metric) defect");
    add_common(tree_cmd, 1);

    CLI::App* ultra_cmd = app.add_subcommand("ultra", "ultrametric defect");
    add_common(ultra_cmd, 1);

    CLI::App* hausdorff_cmd = app.add_subcommand("hausdorff", "Hausdorff distance between subsets");
    add_common(hausdorff_cmd, 1);
    hausdorff_cmd->add_option("--a", o.a_list, "comma-separated indices of A")->required();
    hausdorff_cmd->add_option("--b", o.b_list, "comma-separated indices of B")->required();

    CLI::App* planar_cmd = app.add_subcommand("planar-hausdorff", "Hausdorff distance of planar clouds");
    add_common(planar_cmd, 2);
    planar_cmd->add_flag("--hulls", o.hulls, "compare solid convex hulls");

    CLI::App* gh_cmd = app.add_subcommand("gh", "Gromov-Hausdorff distance (exact search)");
    add_common(gh_cmd, 2);
    gh_cmd->add_option("--budget", o.budget, "search node limit")->check(CLI::PositiveNumber);
    gh_cmd->add_flag("--prime", o.prime, "also compute the GH' variant");

    CLI::App* ghb_cmd = app.add_subcommand("gh-bounds", "certified lower and upper GH bounds");
    add_common(ghb_cmd, 2);
    ghb_cmd->add_option("--budget", o.budget, "search node limit")->check(CLI::PositiveNumber);

    CLI::App* glue_cmd = app.add_subcommand("glue", "glue two spaces along the optimal correspondence");
    add_common(glue_cmd, 2);
    glue_cmd->add_option("--budget", o.budget, "search node limit")->check(CLI::PositiveNumber);

    CLI::App* ts_cmd = app.add_subcommand("tightspan", "sample the injective envelope");
    add_common(ts_cmd, 1);
    ts_cmd->add_option("--trials", o.trials, "number of samples")->check(CLI::PositiveNumber);
    ts_cmd->add_option("--seed", o.seed, "sampling seed");

    CLI::App* hc_cmd = app.add_subcommand("hyperconvex", "hyperconvexity witness search");
    add_common(hc_cmd, 1);

    CLI::App* ug_cmd = app.add_subcommand("urysohn-grow", "grow a Urysohn approximation");
    add_common(ug_cmd, 1, true);
    ug_cmd->add_option("--steps", o.steps, "growth steps")->required()->check(CLI::NonNegativeNumber);
    ug_cmd->add_option("--cap", o.cap, "diameter cap for new states")->check(CLI::PositiveNumber);
    ug_cmd->add_option("--seed", o.seed, "rng seed for new states");

    CLI::App* us_cmd = app.add_subcommand("urysohn-stats", "extension-property statistics");
    add_common(us_cmd, 1);
    us_cmd->add_option("--trials", o.trials, "number of trials")->check(CLI::PositiveNumber);
    us_cmd->add_option("--seed", o.seed, "sampling seed");

    CLI::App* bf_cmd = app.add_subcommand("back-and-forth", "greedy partial-isometry extension");
    add_common(bf_cmd, 2);
    bf_cmd->add_option("--steps", o.steps, "matching steps")->required()->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate_cmd) return cmd_validate(o);
        if (*quotient_cmd) return cmd_quotient(o);
        if (*components_cmd) return cmd_components(o);
        if (*net_cmd) return cmd_net(o);
        if (*pack_cmd) return cmd_pack(o);
        if (*tree_cmd) return cmd_tree(o);
        if (*ultra_cmd) return cmd_ultra(o);
        if (*hausdorff_cmd) return cmd_hausdorff(o);
        if (*planar_cmd) return cmd_planar_hausdorff(o);
        if (*gh_cmd) return cmd_gh(o);
        if (*ghb_cmd) return cmd_gh_bounds(o);
        if (*glue_cmd) return cmd_glue(o);
        if (*ts_cmd) return cmd_tightspan(o);
        if (*hc_cmd) return cmd_hyperconvex(o);
        if (*ug_cmd) return cmd_urysohn_grow(o);
        if (*us_cmd) return cmd_urysohn_stats(o);
        if (*bf_cmd) return cmd_back_and_forth(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
