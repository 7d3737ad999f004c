// parred: exact lattice toolkit for parabolic reductions of principal
// bundles over curves, with a finite-field section-counting oracle.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "parred/bounds.hpp"
#include "parred/eisenstein.hpp"
#include "parred/json_io.hpp"
#include "parred/oracle_sl2.hpp"

namespace fs = std::filesystem;
using namespace parred;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCheckFailed = 3;

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw config_error("not an integer: " + s);
    }
}

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw config_error("not a rational: " + s);
    }
}

IVec parse_ivec(const std::string& s) {
    IVec v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        v.push_back(parse_int(item));
    }
    return v;
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> v;
    for (const auto& x : parse_ivec(s)) v.push_back(to_long(x));
    return v;
}

// 1-based simple-root indices on the command line
std::vector<std::size_t> parse_subset(const std::string& s) {
    std::vector<std::size_t> I;
    for (const auto& x : parse_ivec(s)) {
        const long i = to_long(x);
        if (i < 1) throw config_error("simple-root indices are 1-based");
        I.push_back(static_cast<std::size_t>(i - 1));
    }
    return I;
}

IVec parse_cochar(const RootDatum& rd, const std::string& s,
                  const std::string& basis) {
    const IVec raw = parse_ivec(s);
    if (basis == "ambient") {
        if (raw.size() != rd.ambient_dim())
            throw config_error("ambient cocharacter needs " +
                               std::to_string(rd.ambient_dim()) + " entries");
        return raw;
    }
    if (basis == "coroot") {
        if (raw.size() != rd.rank_ss())
            throw config_error("coroot-basis cocharacter needs " +
                               std::to_string(rd.rank_ss()) + " entries");
        IVec mu = zero_vec(rd.ambient_dim());
        for (std::size_t b = 0; b < rd.rank_ss(); ++b)
            mu = mu + raw[b] * rd.simple_coroot(b);
        return mu;
    }
    throw config_error("--basis must be coroot or ambient");
}

Json series_to_json(const LaurentSeries& s) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["vars"] = s.vars();
    Json win = Json::array();
    for (const auto& [lo, hi] : s.window())
        win.push_back(Json::array({lo, hi}));
    j["window"] = win;
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Json t;
        t["e"] = e;
        t["c"] = rat_to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

LaurentSeries series_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    WindowBounds win;
    for (const auto& w : j.at("window"))
        win.emplace_back(w.at(0).get<long>(), w.at(1).get<long>());
    LaurentSeries s(vars, win);
    for (const auto& t : j.at("terms"))
        s.add_term(t.at("e").get<ExpVec>(), json_to_rat(t.at("c")));
    return s;
}

Json rationality_to_json(const RationalityReport& rep) {
    Json j;
    j["schema"] = kSchemaVersion;
    Json safe = Json::array();
    for (const auto& [lo, hi] : rep.safe_region)
        safe.push_back(Json::array({lo, hi}));
    j["safe_region"] = safe;
    Json support = Json::array();
    for (const auto& [e, c] : rep.support) {
        Json t;
        t["e"] = e;
        t["c"] = rat_to_json(c);
        support.push_back(t);
    }
    j["support"] = support;
    Json viol = Json::array();
    for (const auto& [e, c] : rep.violations) {
        Json t;
        t["e"] = e;
        t["c"] = rat_to_json(c);
        viol.push_back(t);
    }
    j["violations"] = viol;
    j["pass"] = rep.pass;
    return j;
}

Json asymptotic_to_json(const AsymptoticReport& rep) {
    Json j;
    j["schema"] = kSchemaVersion;
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json t;
        t["type"] = ivec_to_json(it.cochar);
        t["count"] = int_to_json(it.count);
        t["d"] = int_to_json(it.d);
        t["exponent"] = it.exponent;
        t["main_term"] = rat_to_json(it.main_term);
        t["covered"] = it.covered;
        t["pass"] = it.pass;
        items.push_back(t);
    }
    j["items"] = items;
    j["pass"] = rep.pass;
    return j;
}

Json type_to_json(const ParabolicData& pd, const NumericalType& t) {
    Json j;
    j["values"] = ivec_to_json(t.values);
    j["d"] = int_to_json(degree_functional(pd, t));
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << std::endl; }

std::map<IVec, Int> counts_for_q(const std::vector<SectionCount>& table,
                                 long q) {
    std::map<IVec, Int> counts;
    for (const auto& sc : table) {
        if (sc.q != q) continue;
        IVec key{Int(-sc.n)};
        counts[key] = sc.count;
    }
    return counts;
}

std::vector<SectionCount> load_counts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open " + path);
    return read_counts_tsv(in);
}

// ---------------------------------------------------------------------
// pipeline

struct PipelineConfig {
    std::string rootdata_path;
    std::vector<long> q_list{2, 3};
    long n_max = 3;
    long genus = 0;
    Rat c_const = Rat(2);
    std::pair<long, long> window{0, 8};
    long n0 = 0, n1 = 2;
    Int n_star = 0;
    std::string out_dir = "pipeline_out";
};

PipelineConfig load_pipeline_config(const std::string& path) {
    const Json j = load_json_file(path);
    PipelineConfig cfg;
    if (!j.contains("rootdata"))
        throw config_error("pipeline config needs a \"rootdata\" path");
    cfg.rootdata_path = j["rootdata"].get<std::string>();
    // relative paths resolve against the config file location
    const fs::path base = fs::path(path).parent_path();
    if (!fs::path(cfg.rootdata_path).is_absolute())
        cfg.rootdata_path = (base / cfg.rootdata_path).string();
    if (j.contains("q_list")) {
        cfg.q_list.clear();
        for (const auto& q : j["q_list"]) cfg.q_list.push_back(q.get<long>());
    }
    if (j.contains("n_max")) cfg.n_max = j["n_max"].get<long>();
    if (j.contains("genus")) cfg.genus = j["genus"].get<long>();
    if (j.contains("C")) cfg.c_const = json_to_rat(j["C"]);
    cfg.window = {0, 2 * cfg.n_max};
    if (j.contains("window")) {
        cfg.window = {j["window"].at(0).get<long>(),
                      j["window"].at(1).get<long>()};
        // the assembled series is only complete up to exponent 2*n_max
        if (cfg.window.second > 2 * cfg.n_max)
            throw config_error(
                "window upper bound exceeds the oracle coverage 2*n_max");
    }
    if (j.contains("N0")) cfg.n0 = j["N0"].get<long>();
    if (j.contains("N1")) cfg.n1 = j["N1"].get<long>();
    if (j.contains("N_star")) cfg.n_star = json_to_int(j["N_star"]);
    if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
    if (cfg.q_list.empty()) throw config_error("q_list must be nonempty");
    for (const auto q : cfg.q_list)
        if (!GF::supported(q))
            throw config_error("unsupported field size q = " +
                               std::to_string(q));
    if (cfg.genus != 0)
        throw config_error(
            "the desk-scale pipeline requires a genus-0 configuration");
    return cfg;
}

int run_pipeline(const PipelineConfig& cfg, unsigned jobs) {
    const RootDatum rd = load_root_datum(cfg.rootdata_path);
    if (rd.rank_ss() != 1 || rd.rank_torus() != 0 ||
        rd.simple_coroot(0) != IVec{Int(1)})
        throw config_error(
            "the pipeline oracle covers the SL2 root datum only");
    fs::create_directories(cfg.out_dir);
    const ParabolicData borel = build_parabolic(rd, {});
    std::string failed_stage;

    // stage 1: oracle counts
    const auto table = count_table(cfg.q_list, cfg.n_max, jobs);
    {
        std::ofstream out(fs::path(cfg.out_dir) / "counts.tsv");
        write_counts_tsv(out, table);
    }

    // stage 2: series assembly
    const WindowBounds window{{cfg.window.first, cfg.window.second}};
    std::map<long, LaurentSeries> series;
    {
        Json j;
        j["schema"] = kSchemaVersion;
        Json per_q = Json::object();
        for (const auto q : cfg.q_list) {
            const CurveData curve{Int(q), cfg.genus, {}};
            const auto e = assemble_series(rd, counts_for_q(table, q),
                                           zero_vec(1), curve, window);
            if (!e.skipped.empty())
                throw config_error(
                    "window too narrow for the requested n_max");
            series.emplace(q, e.series);
            per_q[std::to_string(q)] = series_to_json(e.series);
        }
        j["per_q"] = per_q;
        write_json_file((fs::path(cfg.out_dir) / "series.json").string(), j);
    }

    // stage 3: rationality
    {
        Json j;
        j["schema"] = kSchemaVersion;
        Json per_q = Json::object();
        bool pass = true;
        for (const auto q : cfg.q_list) {
            const CurveData curve{Int(q), cfg.genus, {}};
            const auto qpoly = denominator_Q(rd, curve, window);
            const auto rep =
                rationality_check(series.at(q), qpoly, cfg.n0, cfg.n1);
            per_q[std::to_string(q)] = rationality_to_json(rep);
            pass = pass && rep.pass;
        }
        j["per_q"] = per_q;
        j["pass"] = pass;
        write_json_file((fs::path(cfg.out_dir) / "rationality.json").string(),
                        j);
        if (!pass && failed_stage.empty()) failed_stage = "rationality";
    }

    // stage 4: asymptotics
    {
        Json j;
        j["schema"] = kSchemaVersion;
        Json per_q = Json::object();
        bool pass = true;
        for (const auto q : cfg.q_list) {
            const auto rep =
                asymptotic_check(counts_for_q(table, q), borel, cfg.genus,
                                 Int(q), cfg.c_const, cfg.n_star);
            per_q[std::to_string(q)] = asymptotic_to_json(rep);
            pass = pass && rep.pass;
        }
        j["per_q"] = per_q;
        j["pass"] = pass;
        write_json_file((fs::path(cfg.out_dir) / "asymptotics.json").string(),
                        j);
        if (!pass && failed_stage.empty()) failed_stage = "asymptotics";
    }

    // stage 5: bound consistency on the enumerated types
    {
        Json j;
        j["schema"] = kSchemaVersion;
        bool pass = true;
        long pairs = 0;
        const auto types =
            enumerate_types(borel, topological_type(rd, zero_vec(1)), 0,
                            2 * cfg.n_max);
        for (long g = 0; g <= 2; ++g) {
            const Int cap = Int(g) * Int(borel.dim_G_mod_P);
            for (const auto& sigma : types)
                for (const auto& gamma : types) {
                    if (!leq(borel, sigma, gamma)) continue;
                    if (degree_functional(borel, gamma) > cap) continue;
                    const auto rep = hilbert_bound(borel, sigma, {gamma}, g);
                    pass = pass && rep.upper_bound >= rep.expected_dim;
                    ++pairs;
                }
        }
        j["pairs_checked"] = pairs;
        j["pass"] = pass;
        write_json_file((fs::path(cfg.out_dir) / "bounds.json").string(), j);
        if (!pass && failed_stage.empty()) failed_stage = "bounds";
    }

    if (!failed_stage.empty()) {
        std::cerr << "pipeline failed at stage: " << failed_stage
                  << std::endl;
        return kExitCheckFailed;
    }
    std::cout << "pipeline complete: reports in " << cfg.out_dir << std::endl;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "parred: root data, parabolic character lattices, numerical types,\n"
        "dimension bounds, normalized Eisenstein series, and a finite-field\n"
        "section-counting oracle, all in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string rd_path, basis = "coroot";
    unsigned jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for the oracle")
        ->capture_default_str();

    // ---------------- rootdata ----------------
    auto* rootdata = app.add_subcommand("rootdata", "root datum queries");
    rootdata->require_subcommand(1);
    auto* rd_inspect = rootdata->add_subcommand("inspect", "print rank, root"
                                                " count, fundamental weights");
    std::string inspect_file;
    bool inspect_json = false;
    rd_inspect->add_option("file", inspect_file, "root datum JSON file")
        ->required();
    rd_inspect->add_flag("--json", inspect_json, "emit the full JSON record");

    // ---------------- parabolic ----------------
    auto* parabolic = app.add_subcommand("parabolic", "parabolic lattice data");
    parabolic->require_subcommand(1);
    auto* pinfo = parabolic->add_subcommand("info", "dim(G/P), chi_P, X*(P)");
    std::string pinfo_file, pinfo_I;
    pinfo->add_option("file", pinfo_file, "root datum JSON file")->required();
    pinfo->add_option("--I", pinfo_I, "1-based simple-root indices, e.g. 1,3");

    // ---------------- numtype ----------------
    auto* numtype = app.add_subcommand("numtype", "numerical-type machinery");
    numtype->require_subcommand(1);
    std::string nt_I, nt_sigma, nt_tau, nt_mu, nt_mu2, nt_rep;
    long nt_genus = 0;
    Int nt_bound;
    std::string nt_dmin = "0", nt_dmax = "0", nt_N = "0";
    std::string integrality = "strict";

    auto add_rd_opt = [&rd_path](CLI::App* cmd) {
        cmd->add_option("--rd", rd_path, "root datum JSON file")->required();
    };
    auto add_basis_opt = [&basis](CLI::App* cmd) {
        cmd->add_option("--basis", basis,
                        "cocharacter entry basis: coroot|ambient");
    };

    auto* nt_leq = numtype->add_subcommand("leq", "dominance order test");
    add_rd_opt(nt_leq);
    add_basis_opt(nt_leq);
    nt_leq->add_option("--I", nt_I, "parabolic subset (1-based)");
    nt_leq->add_option("--sigma", nt_sigma, "first cocharacter")->required();
    nt_leq->add_option("--tau", nt_tau, "second cocharacter")->required();
    nt_leq->add_option("--integrality", integrality,
                       "cocharacter-order integrality: strict|rational");

    auto* nt_star = numtype->add_subcommand("star", "property (*) test");
    add_rd_opt(nt_star);
    add_basis_opt(nt_star);
    nt_star->add_option("--I", nt_I, "parabolic subset (1-based)");
    nt_star->add_option("--sigma", nt_sigma, "type as cocharacter")
        ->required();
    nt_star->add_option("--N", nt_N, "threshold")->required();

    auto* nt_class = numtype->add_subcommand("class", "topological type");
    add_rd_opt(nt_class);
    add_basis_opt(nt_class);
    nt_class->add_option("--mu", nt_mu, "cocharacter")->required();

    auto* nt_enum = numtype->add_subcommand("enum", "enumerate types");
    add_rd_opt(nt_enum);
    add_basis_opt(nt_enum);
    nt_enum->add_option("--I", nt_I, "parabolic subset (1-based)");
    nt_enum->add_option("--rep", nt_rep,
                        "cocharacter representing the topological class")
        ->required();
    nt_enum->add_option("--dmin", nt_dmin, "smallest degree")->required();
    nt_enum->add_option("--dmax", nt_dmax, "largest degree")->required();

    auto* nt_chain = numtype->add_subcommand("chain", "coroot chain");
    add_rd_opt(nt_chain);
    add_basis_opt(nt_chain);
    nt_chain->add_option("--nu", nt_mu, "starting cocharacter")->required();
    nt_chain->add_option("--mu", nt_mu2, "target cocharacter")->required();
    nt_chain->add_option("--genus", nt_genus, "genus")->capture_default_str();

    auto* nt_ub = numtype->add_subcommand("upperbound", "common upper bound");
    add_rd_opt(nt_ub);
    add_basis_opt(nt_ub);
    nt_ub->add_option("--mu1", nt_mu, "first cocharacter")->required();
    nt_ub->add_option("--mu2", nt_mu2, "second cocharacter")->required();
    nt_ub->add_option("--genus", nt_genus, "genus")->capture_default_str();

    // ---------------- bounds ----------------
    auto* bounds = app.add_subcommand("bounds", "dimension-bound calculators");
    bounds->require_subcommand(1);
    std::string bd_I, bd_sigma, bd_tau, bd_minimal, bd_observed = "0";
    long bd_genus = 0;
    std::string bd_nb = "1", bd_md = "1";

    auto* bd_hilb = bounds->add_subcommand("hilb", "component dimension bound");
    add_rd_opt(bd_hilb);
    add_basis_opt(bd_hilb);
    bd_hilb->add_option("--I", bd_I, "parabolic subset (1-based)");
    bd_hilb->add_option("--sigma", bd_sigma, "type as cocharacter")
        ->required();
    bd_hilb
        ->add_option("--minimal", bd_minimal,
                     "semicolon-separated minimal types as cocharacters")
        ->required();
    bd_hilb->add_option("--genus", bd_genus, "genus")->capture_default_str();

    auto* bd_lbd = bounds->add_subcommand("lbd", "lower-bound increment");
    add_rd_opt(bd_lbd);
    add_basis_opt(bd_lbd);
    bd_lbd->add_option("--I", bd_I, "parabolic subset (1-based)");
    bd_lbd->add_option("--sigma", bd_sigma, "smaller type")->required();
    bd_lbd->add_option("--tau", bd_tau, "larger type")->required();

    auto* bd_gen = bounds->add_subcommand("generic", "generic stability check");
    add_rd_opt(bd_gen);
    add_basis_opt(bd_gen);
    bd_gen->add_option("--I", bd_I, "parabolic subset (1-based)");
    bd_gen->add_option("--sigma", bd_sigma, "type as cocharacter")
        ->required();
    bd_gen->add_option("--genus", bd_genus, "genus")->capture_default_str();
    bd_gen->add_option("--observed", bd_observed, "observed dimension");

    auto* bd_const = bounds->add_subcommand("constants", "N_P from N_B, M_D");
    add_rd_opt(bd_const);
    bd_const->add_option("--I", bd_I, "parabolic subset (1-based)");
    bd_const->add_option("--NB", bd_nb, "Borel threshold N_B")->required();
    bd_const->add_option("--MD", bd_md, "reduction height bound M_D")
        ->required();

    auto* bd_exp = bounds->add_subcommand("expected", "Borel expected dim");
    add_rd_opt(bd_exp);
    add_basis_opt(bd_exp);
    bd_exp->add_option("--sigma", bd_sigma, "Borel type as cocharacter")
        ->required();
    bd_exp->add_option("--genus", bd_genus, "genus")->capture_default_str();

    // ---------------- eisenstein ----------------
    auto* eis = app.add_subcommand("eisenstein", "normalized series tools");
    eis->require_subcommand(1);
    std::string eis_q = "2", eis_frob, eis_counts, eis_series,
        eis_sigma0 = "0", eis_window = "0,8", eis_out, eis_C = "2",
        eis_N = "0";
    long eis_genus = 0, eis_n0 = 0, eis_n1 = 2;

    auto* eis_qpoly = eis->add_subcommand("q-poly", "denominator polynomial");
    add_rd_opt(eis_qpoly);
    eis_qpoly->add_option("--q", eis_q, "field size")->required();
    eis_qpoly->add_option("--genus", eis_genus, "genus")
        ->capture_default_str();
    eis_qpoly->add_option("--frob", eis_frob,
                          "comma-separated Frobenius eigenvalues (2g values)");
    eis_qpoly->add_option("--window", eis_window, "exponent window lo,hi");

    auto* eis_asm = eis->add_subcommand("assemble", "series from counts");
    add_rd_opt(eis_asm);
    eis_asm->add_option("--counts", eis_counts, "counts TSV from the oracle")
        ->required();
    eis_asm->add_option("--q", eis_q, "field size to select rows")
        ->required();
    eis_asm->add_option("--sigma0", eis_sigma0,
                        "base type in coroot coordinates");
    eis_asm->add_option("--window", eis_window, "exponent window lo,hi");
    eis_asm->add_option("--out", eis_out, "write the series JSON here");

    auto* eis_rat = eis->add_subcommand("check-rational", "rationality check");
    add_rd_opt(eis_rat);
    eis_rat->add_option("--series", eis_series, "series JSON file")
        ->required();
    eis_rat->add_option("--q", eis_q, "field size")->required();
    eis_rat->add_option("--genus", eis_genus, "genus")->capture_default_str();
    eis_rat->add_option("--frob", eis_frob, "Frobenius eigenvalues");
    eis_rat->add_option("--N0", eis_n0, "largest allowed negative degree");
    eis_rat->add_option("--N1", eis_n1, "largest allowed positive degree");

    auto* eis_asy =
        eis->add_subcommand("check-asymptotic", "main-term comparison");
    add_rd_opt(eis_asy);
    eis_asy->add_option("--counts", eis_counts, "counts TSV")->required();
    eis_asy->add_option("--q", eis_q, "field size")->required();
    eis_asy->add_option("--C", eis_C, "constant C")->capture_default_str();
    eis_asy->add_option("--N", eis_N, "property (*) threshold")
        ->capture_default_str();
    eis_asy->add_option("--genus", eis_genus, "genus")->capture_default_str();

    // ---------------- oracle ----------------
    auto* oracle = app.add_subcommand("oracle", "finite-field section counts");
    oracle->require_subcommand(1);
    std::string or_q = "2,3", or_out;
    long or_nmax = 3, or_m = 0, or_gq = 2;

    auto* or_count = oracle->add_subcommand("count", "count sections");
    or_count->add_option("--q", or_q, "comma-separated field sizes")
        ->capture_default_str();
    or_count->add_option("--nmax", or_nmax, "largest degree")
        ->capture_default_str();
    or_count->add_option("--out", or_out, "TSV output path (default stdout)");

    auto* or_gap = oracle->add_subcommand("gapshift", "rank-2 gap promotion");
    or_gap->add_option("--q", or_gq, "field size")->required();
    or_gap->add_option("--m", or_m, "degree gap of the split bundle")
        ->required();

    // ---------------- pipeline ----------------
    auto* pipeline =
        app.add_subcommand("pipeline", "oracle -> series -> rationality -> "
                                       "asymptotics -> bounds");
    std::string pipe_config, pipe_out;
    pipeline->add_option("--config", pipe_config, "pipeline config JSON")
        ->required();
    pipeline->add_option("--out", pipe_out, "output directory override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*rd_inspect) {
            const RootDatum rd = load_root_datum(inspect_file);
            if (inspect_json) {
                emit(root_datum_to_json(rd));
                return kExitOk;
            }
            std::cout << "name: " << rd.name() << "\n"
                      << "rank_ss: " << rd.rank_ss() << "\n"
                      << "rank_torus: " << rd.rank_torus() << "\n"
                      << "positive roots: " << rd.positive_roots().size()
                      << "\n";
            for (const auto& w : rd.fundamental_weights()) {
                std::cout << "w_" << (w.alpha_index + 1) << ": (";
                for (std::size_t k = 0; k < w.vector.size(); ++k)
                    std::cout << (k ? ", " : "") << w.vector[k].get_str();
                std::cout << ")\n";
            }
            return kExitOk;
        }

        if (*pinfo) {
            const RootDatum rd = load_root_datum(pinfo_file);
            const ParabolicData pd =
                build_parabolic(rd, parse_subset(pinfo_I));
            Json j;
            j["schema"] = kSchemaVersion;
            j["dim_G_mod_P"] = pd.dim_G_mod_P;
            auto in_roots =
                solve_integer(transpose(rd.simple_roots()), pd.chi_P);
            if (in_roots) j["chi_P_root_coords"] = ivec_to_json(*in_roots);
            j["chi_P_ambient"] = ivec_to_json(pd.chi_P);
            Json basis_rows = Json::array();
            for (const auto& row : pd.char_lattice_basis)
                basis_rows.push_back(ivec_to_json(row));
            j["char_lattice_basis"] = basis_rows;
            j["cochar_rank"] = pd.cochar_rank;
            emit(j);
            return kExitOk;
        }

        if (*nt_leq) {
            const RootDatum rd = load_root_datum(rd_path);
            Json j;
            j["schema"] = kSchemaVersion;
            if (nt_I.empty()) {
                const IVec s = parse_cochar(rd, nt_sigma, basis);
                const IVec t = parse_cochar(rd, nt_tau, basis);
                const auto mode = integrality == "rational"
                                      ? OrderIntegrality::rational
                                      : OrderIntegrality::strict;
                j["leq"] = cocharacter_leq(rd, s, t, mode);
            } else {
                const ParabolicData pd =
                    build_parabolic(rd, parse_subset(nt_I));
                const NumericalType s = restrict_cocharacter(
                    pd, parse_cochar(rd, nt_sigma, basis));
                const NumericalType t = restrict_cocharacter(
                    pd, parse_cochar(rd, nt_tau, basis));
                j["leq"] = leq(pd, s, t);
            }
            emit(j);
            return kExitOk;
        }

        if (*nt_star) {
            const RootDatum rd = load_root_datum(rd_path);
            const ParabolicData pd = build_parabolic(rd, parse_subset(nt_I));
            const NumericalType s =
                restrict_cocharacter(pd, parse_cochar(rd, nt_sigma, basis));
            Json j;
            j["schema"] = kSchemaVersion;
            j["satisfies_star"] = satisfies_star(pd, s, parse_int(nt_N));
            Json gens = Json::array();
            for (const auto& g : star_generators(pd)) {
                Json gj;
                gj["beta"] = g.beta + 1;
                gj["n_beta"] = int_to_json(g.n_beta);
                gj["value"] = int_to_json(-dot(s.values, g.chi_coords));
                gens.push_back(gj);
            }
            j["generator_values"] = gens;
            emit(j);
            return kExitOk;
        }

        if (*nt_class) {
            const RootDatum rd = load_root_datum(rd_path);
            const auto c =
                topological_type(rd, parse_cochar(rd, nt_mu, basis));
            Json j;
            j["schema"] = kSchemaVersion;
            j["invariant_factors"] = ivec_to_json(c.invariant_factors);
            j["residues"] = ivec_to_json(c.residues);
            j["lift"] = ivec_to_json(c.lift);
            j["torsion_order"] = int_to_json(c.torsion_order());
            j["free_rank"] = c.free_rank();
            emit(j);
            return kExitOk;
        }

        if (*nt_enum) {
            const RootDatum rd = load_root_datum(rd_path);
            const ParabolicData pd = build_parabolic(rd, parse_subset(nt_I));
            const auto c =
                topological_type(rd, parse_cochar(rd, nt_rep, basis));
            const auto types =
                enumerate_types(pd, c, parse_int(nt_dmin), parse_int(nt_dmax));
            Json j;
            j["schema"] = kSchemaVersion;
            Json arr = Json::array();
            for (const auto& t : types) arr.push_back(type_to_json(pd, t));
            j["types"] = arr;
            emit(j);
            return kExitOk;
        }

        if (*nt_chain) {
            const RootDatum rd = load_root_datum(rd_path);
            const auto chain =
                coroot_chain(rd, parse_cochar(rd, nt_mu, basis),
                             parse_cochar(rd, nt_mu2, basis), nt_genus);
            Json j;
            j["schema"] = kSchemaVersion;
            Json arr = Json::array();
            for (const auto& mu : chain) arr.push_back(ivec_to_json(mu));
            j["chain"] = arr;
            emit(j);
            return kExitOk;
        }

        if (*nt_ub) {
            const RootDatum rd = load_root_datum(rd_path);
            const IVec mu =
                common_upper_bound(rd, parse_cochar(rd, nt_mu, basis),
                                   parse_cochar(rd, nt_mu2, basis), nt_genus);
            Json j;
            j["schema"] = kSchemaVersion;
            j["upper_bound"] = ivec_to_json(mu);
            emit(j);
            return kExitOk;
        }

        if (*bd_hilb) {
            const RootDatum rd = load_root_datum(rd_path);
            const ParabolicData pd = build_parabolic(rd, parse_subset(bd_I));
            const NumericalType sigma =
                restrict_cocharacter(pd, parse_cochar(rd, bd_sigma, basis));
            std::vector<NumericalType> minimal;
            std::stringstream ss(bd_minimal);
            std::string item;
            while (std::getline(ss, item, ';'))
                if (!item.empty())
                    minimal.push_back(restrict_cocharacter(
                        pd, parse_cochar(rd, item, basis)));
            const auto rep = hilbert_bound(pd, sigma, minimal, bd_genus);
            Json j;
            j["schema"] = kSchemaVersion;
            j["sigma"] = ivec_to_json(rep.sigma.values);
            j["gamma"] = ivec_to_json(rep.gamma.values);
            j["d_sigma"] = int_to_json(rep.d_sigma);
            j["d_gamma"] = int_to_json(rep.d_gamma);
            j["dim_G_mod_P"] = int_to_json(rep.dim_g_mod_p);
            j["upper_bound"] = int_to_json(rep.upper_bound);
            j["expected_dim"] = int_to_json(rep.expected_dim);
            j["minimal_cap"] = int_to_json(rep.minimal_cap);
            j["genus"] = rep.genus;
            emit(j);
            return kExitOk;
        }

        if (*bd_lbd) {
            const RootDatum rd = load_root_datum(rd_path);
            const ParabolicData pd = build_parabolic(rd, parse_subset(bd_I));
            const NumericalType s =
                restrict_cocharacter(pd, parse_cochar(rd, bd_sigma, basis));
            const NumericalType t =
                restrict_cocharacter(pd, parse_cochar(rd, bd_tau, basis));
            Json j;
            j["schema"] = kSchemaVersion;
            j["increment"] = int_to_json(lower_bound_chain(pd, s, t));
            emit(j);
            return kExitOk;
        }

        if (*bd_gen) {
            const RootDatum rd = load_root_datum(rd_path);
            const ParabolicData pd = build_parabolic(rd, parse_subset(bd_I));
            const NumericalType s =
                restrict_cocharacter(pd, parse_cochar(rd, bd_sigma, basis));
            const auto v =
                generic_stability_check(pd, s, bd_genus, parse_int(bd_observed));
            Json j;
            j["schema"] = kSchemaVersion;
            j["expected_dim"] = int_to_json(v.expected_dim);
            j["observed_dim"] = int_to_json(v.observed_dim);
            j["dims_match"] = v.dims_match;
            j["d"] = int_to_json(v.d_value);
            j["lower_threshold"] = int_to_json(v.lower_threshold);
            j["lower_bound_ok"] = v.lower_bound_ok;
            j["genus_warning"] = v.genus_warning;
            emit(j);
            return kExitOk;
        }

        if (*bd_const) {
            const RootDatum rd = load_root_datum(rd_path);
            const ParabolicData pd = build_parabolic(rd, parse_subset(bd_I));
            const auto sc = star_constants(rd, pd, parse_int(bd_nb), parse_int(bd_md));
            Json j;
            j["schema"] = kSchemaVersion;
            Json gens = Json::array();
            for (const auto& g : sc.generators) {
                Json gj;
                gj["beta"] = g.beta + 1;
                gj["n_beta"] = int_to_json(g.n_beta);
                gj["n_beta_alpha"] = ivec_to_json(g.n_beta_alpha);
                gj["chi"] = ivec_to_json(g.chi_ambient);
                gens.push_back(gj);
            }
            j["generators"] = gens;
            j["m_I"] = int_to_json(sc.m_I);
            j["n_I"] = int_to_json(sc.n_I);
            j["N_B"] = int_to_json(sc.N_B);
            j["M_D"] = int_to_json(sc.M_D);
            j["N_P"] = int_to_json(sc.N_P);
            emit(j);
            return kExitOk;
        }

        if (*bd_exp) {
            const RootDatum rd = load_root_datum(rd_path);
            Json j;
            j["schema"] = kSchemaVersion;
            j["expected_dim"] = int_to_json(borel_expected_dim(
                rd, parse_cochar(rd, bd_sigma, basis), bd_genus));
            emit(j);
            return kExitOk;
        }

        if (*eis_qpoly) {
            const RootDatum rd = load_root_datum(rd_path);
            CurveData curve{parse_int(eis_q), eis_genus, {}};
            if (!eis_frob.empty()) {
                std::stringstream ss(eis_frob);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) curve.frobenius.push_back(parse_rat(item));
            }
            const auto lohi = parse_longs(eis_window);
            if (lohi.size() != 2)
                throw config_error("--window expects lo,hi");
            const WindowBounds window(rd.rank_ss(), {lohi[0], lohi[1]});
            emit(series_to_json(denominator_Q(rd, curve, window)));
            return kExitOk;
        }

        if (*eis_asm) {
            const RootDatum rd = load_root_datum(rd_path);
            if (rd.rank_ss() != 1)
                throw config_error(
                    "assemble ingests the SL2 oracle TSV (rank-1 datum)");
            const auto table = load_counts(eis_counts);
            const long q = to_long(parse_int(eis_q));
            auto counts = counts_for_q(table, q);
            if (counts.empty())
                throw config_error("no rows for q = " + eis_q);
            const auto lohi = parse_longs(eis_window);
            if (lohi.size() != 2)
                throw config_error("--window expects lo,hi");
            const CurveData curve{Int(q), 0, {}};
            IVec sigma0 = zero_vec(rd.ambient_dim());
            if (!eis_sigma0.empty())
                sigma0 = parse_cochar(rd, eis_sigma0, "coroot");
            const auto e =
                assemble_series(rd, counts, sigma0, curve,
                                WindowBounds{{lohi[0], lohi[1]}});
            Json j = series_to_json(e.series);
            Json skipped = Json::array();
            for (const auto& s : e.skipped) skipped.push_back(ivec_to_json(s));
            j["skipped_types"] = skipped;
            if (!eis_out.empty()) {
                write_json_file(eis_out, j);
                std::cout << "wrote " << eis_out << std::endl;
            } else {
                emit(j);
            }
            return kExitOk;
        }

        if (*eis_rat) {
            const RootDatum rd = load_root_datum(rd_path);
            const LaurentSeries e = series_from_json(load_json_file(eis_series));
            CurveData curve{parse_int(eis_q), eis_genus, {}};
            if (!eis_frob.empty()) {
                std::stringstream ss(eis_frob);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) curve.frobenius.push_back(parse_rat(item));
            }
            const auto qpoly = denominator_Q(rd, curve, e.window());
            const auto rep = rationality_check(e, qpoly, eis_n0, eis_n1);
            emit(rationality_to_json(rep));
            return rep.pass ? kExitOk : kExitCheckFailed;
        }

        if (*eis_asy) {
            const RootDatum rd = load_root_datum(rd_path);
            if (rd.rank_ss() != 1)
                throw config_error("the counts TSV describes SL2 types");
            const ParabolicData pd = build_parabolic(rd, {});
            const auto table = load_counts(eis_counts);
            const long q = to_long(parse_int(eis_q));
            const auto rep =
                asymptotic_check(counts_for_q(table, q), pd, eis_genus,
                                 Int(q), parse_rat(eis_C), parse_int(eis_N));
            emit(asymptotic_to_json(rep));
            return rep.pass ? kExitOk : kExitCheckFailed;
        }

        if (*or_count) {
            const auto table = count_table(parse_longs(or_q), or_nmax, jobs);
            if (or_out.empty()) {
                write_counts_tsv(std::cout, table);
            } else {
                std::ofstream out(or_out);
                if (!out) throw config_error("cannot write " + or_out);
                write_counts_tsv(out, table);
                std::cout << "wrote " << or_out << std::endl;
            }
            return kExitOk;
        }

        if (*or_gap) {
            Json j;
            j["schema"] = kSchemaVersion;
            j["q"] = or_gq;
            j["m"] = or_m;
            j["gap_shift_exists"] = gap_shift_check(or_gq, or_m);
            emit(j);
            return kExitOk;
        }

        if (*pipeline) {
            PipelineConfig cfg = load_pipeline_config(pipe_config);
            if (!pipe_out.empty()) cfg.out_dir = pipe_out;
            return run_pipeline(cfg, jobs);
        }
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << std::endl;
        return kExitConfig;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << std::endl;
        return 1;
    }
    return kExitOk;
}
