#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <thread>

#include <CLI11.hpp>

#include "pencil_tns/error.hpp"
#include "pencil_tns/io.hpp"

using namespace ptns;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::uint64_t modulus = Fp::kDefaultModulus;
    std::string format = "json";
    std::string out;
};

struct Outcome {
    Json body;
    int code = 0;
    bool lines = false;  // body is an array emitted one record per line
};

struct ConfigFlags {
    std::optional<std::size_t> m, m01, m02, m12, k1, k2;

    void attach(CLI::App* app) {
        app->add_option("-m,--m", m, "bond size to vertex 0 on both sides");
        app->add_option("--m01", m01, "bond size between vertices 0 and 1");
        app->add_option("--m02", m02, "bond size between vertices 0 and 2");
        app->add_option("--m12", m12, "bond size between vertices 1 and 2");
        app->add_option("--k1", k1, "deficit of vertex 1");
        app->add_option("--k2", k2, "deficit of vertex 2");
    }
    bool given() const { return m || m01 || m02 || m12 || k1 || k2; }

    TriangleConfig resolve(const std::optional<TriangleConfig>& fallback = std::nullopt) const {
        TriangleConfig c = fallback && !given() ? *fallback : TriangleConfig{};
        if (m) c.m01 = c.m02 = *m;
        if (m01) c.m01 = *m01;
        if (m02) c.m02 = *m02;
        if (m12) c.m12 = *m12;
        if (k1) c.k1 = *k1;
        if (k2) c.k2 = *k2;
        c.validate();
        return c;
    }
};

// "-m12" would otherwise parse as "-m 12".
std::vector<std::string> normalize_args(int argc, char** argv) {
    static const std::regex short_long("^-(m01|m02|m12|k1|k2)(=.*)?$");
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        args.push_back(std::regex_match(a, short_long) ? "-" + a : a);
    }
    std::reverse(args.begin(), args.end());
    return args;
}

void flatten_table(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object() && !j.empty()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten_table(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void write(const Outcome& o, const Globals& g) {
    std::ofstream file;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) throw InputError("cannot write '" + g.out + "'");
    }
    std::ostream& os = g.out.empty() ? std::cout : file;
    if (g.format == "table") {
        if (o.lines)
            for (const auto& rec : o.body) flatten_table(rec, "", os), os << "\n";
        else
            flatten_table(o.body, "", os);
    } else if (o.lines) {
        for (const auto& rec : o.body) os << rec.dump() << "\n";
    } else {
        os << o.body.dump(2) << "\n";
    }
}

std::optional<TriangleConfig> config_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("config")) return std::nullopt;
    const Json& c = j.at("config");
    auto get = [&c](const char* k, std::size_t fallback) {
        return c.contains(k) ? c.at(k).get<std::size_t>() : fallback;
    };
    TriangleConfig cfg{get("m01", 2), get("m02", 2), get("m12", 2), get("k1", 0), get("k2", 0)};
    cfg.validate();
    return cfg;
}

const Json& payload(const Json& j, const char* key) { return j.is_object() && j.contains(key) ? j.at(key) : j; }

MatrixPencil load_pencil(const Json& j) { return pencil_from_json(payload(j, "pencil")); }

Tensor<Rational> load_tensor(const Json& j) {
    if (j.is_object() && j.contains("tensor")) return tensor_from_json(j.at("tensor"));
    if (j.is_object() && (j.contains("n1") || j.contains("pencil"))) return load_pencil(j).to_tensor();
    return tensor_from_json(j);
}

Json verdict(const std::string& test, bool pass, Json certificate) {
    return Json{{"test", test}, {"verdict", pass ? "pass" : "fail"}, {"certificate", std::move(certificate)}};
}

// ---- kronecker ----

Outcome cmd_kronecker(const std::string& file) {
    MatrixPencil p = load_pencil(read_json_file(file));
    KroneckerForm form = kronecker_decompose(p);
    Json body{{"form", to_json(form)}};
    bool rows_ok = form.accounted_rows() == p.rows(), cols_ok = form.accounted_cols() == p.cols();
    body["accounting"] = Json{{"rows", form.accounted_rows()}, {"cols", form.accounted_cols()}, {"ok", rows_ok && cols_ok}};

    bool rational = std::all_of(form.jordan.begin(), form.jordan.end(),
                                [](const JordanGroup& g) { return g.certificate.degree() == 1; });
    Json recon{{"available", rational}};
    if (rational) {
        std::vector<BlockSpec> blocks;
        for (int s : form.left_indices) blocks.push_back({BlockKind::left, s, {}, {}});
        for (int s : form.right_indices) blocks.push_back({BlockKind::right, s, {}, {}});
        for (const auto& g : form.jordan)
            for (int s : g.sizes)
                blocks.push_back({BlockKind::jordan, s, g.certificate.coeff(0), g.certificate.coeff(1)});
        MatrixPencil canon = assemble(blocks);
        recon["canonical"] = to_json(canon);
        recon["verified"] = canon.rows() == p.rows() && canon.cols() == p.cols() &&
                            same_invariants(kronecker_decompose(canon), form);
    }
    body["reconstruction"] = recon;
    bool ok = rows_ok && cols_ok && (!rational || recon["verified"].get<bool>());
    return {body, ok ? 0 : 1};
}

// ---- tns ----

std::vector<std::uint64_t> oracle_seeds(std::uint64_t seed, std::size_t count) {
    std::vector<std::uint64_t> s;
    for (std::size_t i = 0; i < count; ++i) s.push_back(seed + i);
    return s;
}

Json sweep_record(const TriangleConfig& cfg, const Globals& g, std::size_t seeds) {
    auto report = defect_triangle(cfg);
    auto oracle = jacobian_oracle(cfg.network(), oracle_seeds(g.seed, seeds), g.modulus);
    auto odim = static_cast<long long>(oracle.dim);
    return Json{{"config", to_json(cfg)},
                {"formula_dim", report.dim},
                {"oracle_dim", odim},
                {"expdim", report.expected},
                {"defect", report.expected - odim},
                {"fiber_defect", report.parameters - odim},
                {"agree", report.dim == odim && oracle.consistent}};
}

std::size_t worker_count(std::size_t jobs) {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PENCIL_TNS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) throw InputError("PENCIL_TNS_THREADS must be a positive integer");
        n = std::min(n, static_cast<std::size_t>(v));
    }
    return std::max<std::size_t>(1, std::min(n, jobs));
}

Outcome cmd_sweep(std::size_t m_max, std::size_t m12_max, std::size_t seeds, const Globals& g) {
    if (m_max < 2 || m12_max < 2) throw InputError("--m-max and --m12-max must be at least 2");
    std::vector<TriangleConfig> configs;
    for (std::size_t m = 2; m <= m_max; ++m)
        for (std::size_t m12 = 2; m12 <= m12_max; ++m12)
            for (std::size_t k1 = 0; k1 <= m12; ++k1)
                for (std::size_t k2 = 0; k2 <= k1; ++k2) configs.push_back({m, m, m12, k1, k2});
    for (std::size_t m12 = 2; m12 <= m12_max; ++m12)
        for (std::size_t k1 = 0; k1 <= m12; ++k1)
            for (std::size_t k2 = 0; k2 <= m12; ++k2) configs.push_back({2, 3, m12, k1, k2});

    std::vector<Json> records(configs.size());
    std::vector<std::string> errors(configs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < configs.size();) {
            try {
                records[i] = sweep_record(configs[i], g, seeds);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < worker_count(configs.size()); ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    Json out = Json::array();
    bool all = true;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (!errors[i].empty()) throw Error("sweep", errors[i]);
        all = all && records[i]["agree"].get<bool>();
        out.push_back(records[i]);
    }
    return {out, all ? 0 : 1, true};
}

Outcome cmd_tns(const std::string& sub, const ConfigFlags& flags, const std::string& network_file, std::size_t seeds,
                const Globals& g) {
    if (sub == "oracle" && !network_file.empty()) {
        Network net = network_from_json(read_json_file(network_file));
        auto o = jacobian_oracle(net, oracle_seeds(g.seed, seeds), g.modulus);
        auto odim = static_cast<long long>(o.dim);
        return {Json{{"network", to_json(net)},
                     {"oracle_dim", odim},
                     {"ranks", o.ranks},
                     {"consistent", o.consistent},
                     {"expdim", expected_dim(net)},
                     {"defect", expected_dim(net) - odim}},
                o.consistent ? 0 : 1};
    }
    TriangleConfig cfg = flags.resolve();
    Json body{{"config", to_json(cfg)}};
    if (sub == "dim") {
        long long d = dim_triangle(cfg), ambient = ambient_dim(cfg.network());
        body["dim"] = d;
        body["ambient"] = ambient;
        body["fills_ambient"] = d == ambient;
        if (d == ambient) body["notice"] = "variety fills the ambient space; the defective formula does not apply";
        return {body, 0};
    }
    if (sub == "defect") {
        body.update(to_json(defect_triangle(cfg)));
        return {body, 0};
    }
    if (sub == "sample") {
        auto parts = normal_form_parts(cfg, g.seed);
        Json zetas = Json::array();
        for (const auto& z : parts.zetas) zetas.push_back(to_json(z));
        body["seed"] = g.seed;
        body["zetas"] = zetas;
        body["pencil"] = to_json(normal_form_sample(cfg, g.seed));
        return {body, 0};
    }
    if (sub == "oracle") {
        auto rec = sweep_record(cfg, g, seeds);
        return {rec, rec["agree"].get<bool>() ? 0 : 1};
    }
    throw InputError("unknown tns subcommand '" + sub + "'");
}

// ---- member ----

struct MemberFlags {
    ConfigFlags config;
    std::optional<std::size_t> kappa, r, min_points, expect, slot;
    std::size_t q = 1, draws = 3;
    std::vector<std::size_t> acting;
};

Outcome member_crl(const Json& in, const MemberFlags& f, const Globals& g) {
    TriangleConfig cfg = f.config.resolve(config_from_json(in)).canonical();
    MatrixPencil p = load_pencil(in);
    std::vector<std::size_t> kappas;
    if (f.kappa) kappas.push_back(*f.kappa);
    else
        for (std::size_t k = cfg.k1; k + 2 <= cfg.m12; ++k) kappas.push_back(k);
    if (kappas.empty()) throw InputError("no admissible kappa: need k1 <= m12 - 2");
    Json runs = Json::array();
    bool pass = true;
    for (auto k : kappas) {
        auto v = determinant_profile_test(p, cfg, k, g.seed + k);
        Json run = to_json(v);
        run["kappa"] = k;
        runs.push_back(run);
        pass = pass && v.member;
    }
    return {verdict("crl", pass, Json{{"config", to_json(cfg)}, {"runs", runs}}), pass ? 0 : 1};
}

Outcome member_rankdrop(const Json& in, const MemberFlags& f) {
    MatrixPencil p = load_pencil(in);
    std::size_t r = 0, need = f.min_points.value_or(1);
    if (f.r) {
        r = *f.r;
    } else {
        auto cfg = f.config.given() ? std::optional(f.config.resolve()) : config_from_json(in);
        if (!cfg) throw InputError("rankdrop needs --r or a triangle configuration");
        auto c = cfg->canonical();
        r = (c.m01 - 1) * c.m12;
        need = f.min_points.value_or(c.m01);
    }
    auto res = rank_drop_points(p, r);
    Json cert = to_json(res);
    cert["r"] = r;
    cert["required"] = need;
    if (!res.infinite && is_concise(p.to_tensor())) {
        Json pts = Json::array();
        for (const auto& pt : jordan_count_at_rank_drop(p, r)) pts.push_back(to_json(pt));
        cert["jordan_points"] = pts;
    }
    bool pass = res.infinite || res.count >= need;
    return {verdict("rankdrop", pass, cert), pass ? 0 : 1};
}

Outcome member_ruppert(const Json& in, const MemberFlags& f) {
    TernaryForm cubic(3);
    const Json& src = payload(in, "cubic");
    if (src.is_object() && src.contains("coeffs")) {
        const Json& c = src.at("coeffs");
        auto mons = monomials(3);
        if (!c.is_array() || c.size() != mons.size()) throw InputError("field 'coeffs': expected 10 cubic coefficients");
        for (std::size_t i = 0; i < mons.size(); ++i)
            cubic.add(mons[i], rational_from_json(c[i], "coeffs[" + std::to_string(i) + "]"));
    } else {
        std::size_t slot = f.slot.value_or(0);
        if (slot > 2) throw InputError("--slot must be 0, 1 or 2");
        cubic = determinantal_cubics(load_tensor(in))[slot];
    }
    Json coeffs = Json::array();
    for (const auto& x : cubic.coefficients()) coeffs.push_back(to_json(x));
    if (cubic.is_zero()) return {verdict("ruppert", true, Json{{"coeffs", coeffs}, {"rank", nullptr}, {"zero", true}}), 0};
    auto rk = cubic_action_rank(cubic);
    return {verdict("ruppert", rk < 8, Json{{"coeffs", coeffs}, {"rank", rk}}), rk < 8 ? 0 : 1};
}

Outcome member_tns333(const Json& in) {
    auto res = determinantal_cubics_test(load_tensor(in));
    return {verdict("tns333", res.pass, to_json(res)), res.pass ? 0 : 1};
}

Outcome member_schofield(const Json& in, const MemberFlags& f, const Globals& g) {
    auto t = load_tensor(in);
    if (f.draws == 0) throw InputError("--draws must be positive");
    Json ranks = Json::array();
    std::size_t top = 0;
    for (std::size_t d = 0; d < f.draws; ++d) {
        auto rk = bridge_map_rank(t, f.q, g.seed + d);
        ranks.push_back(rk);
        top = std::max(top, rk);
    }
    bool pass = top < 12 * f.q;
    return {verdict("schofield", pass, Json{{"q", f.q}, {"size", 12 * f.q}, {"ranks", ranks}, {"rank", top}}), pass ? 0 : 1};
}

Outcome member_ann(const Json& in, const MemberFlags& f) {
    if (in.is_object() && in.contains("first") && in.contains("second")) {
        std::string mode = in.value("mode", "pencil");
        if (mode != "pencil" && mode != "three-factor") throw InputError("field 'mode': expected pencil or three-factor");
        auto rep = block_annihilator_check(load_tensor(in.at("first")), load_tensor(in.at("second")),
                                           mode == "pencil" ? BlockMode::pencil : BlockMode::three_factor);
        Json cert = to_json(rep);
        cert["mode"] = mode;
        return {verdict("ann", rep.contained, cert), rep.contained ? 0 : 1};
    }
    auto t = load_tensor(in);
    std::vector<std::size_t> acting = f.acting;
    if (acting.empty()) {
        for (std::size_t s = 0; s < t.order(); ++s) acting.push_back(s);
        if (t.order() == 3 && t.dim(0) == 2) acting = {1, 2};
    }
    auto dim = annihilator_dim(t, acting);
    Json cert{{"acting", acting}, {"dim", dim}};
    bool pass = true;
    if (f.expect) {
        cert["expected"] = *f.expect;
        pass = dim == *f.expect;
    }
    return {verdict("ann", pass, cert), pass ? 0 : 1};
}

Outcome cmd_member(const std::string& test, const std::string& file, const MemberFlags& f, const Globals& g) {
    Json in = read_json_file(file);
    if (test == "crl") return member_crl(in, f, g);
    if (test == "rankdrop") return member_rankdrop(in, f);
    if (test == "ruppert") return member_ruppert(in, f);
    if (test == "tns333") return member_tns333(in);
    if (test == "schofield") return member_schofield(in, f, g);
    if (test == "ann") return member_ann(in, f);
    throw InputError("unknown member test '" + test + "'");
}

// ---- degenerate ----

Outcome cmd_degenerate(const std::string& which, const std::string& lambda) {
    if (which == "restriction") {
        Rational lam = Rational::parse(lambda);
        auto rep = verify_restriction(lam);
        Json body = to_json(rep);
        if (rep.mu) {
            auto maps = restriction_maps<Rational>(lam, *rep.mu);
            body["maps"] = Json{to_json(maps[0]), to_json(maps[1]), to_json(maps[2])};
        }
        body["target"] = rep.mu ? to_json(tensor_ii2<Rational>(lam)) : Json(nullptr);
        return {body, rep.verified ? 0 : 1};
    }
    EpsilonCurve curve = which == "iii2"  ? curve_iii2()
                         : which == "iv2" ? curve_iv2()
                         : which == "zero2"
                             ? curve_zero2()
                             : throw InputError("unknown case '" + which + "' (expected iii2, iv2, zero2, restriction)");
    Json body{{"curve", to_json(curve)}, {"transcript", to_json(verify_named_degeneration(which))}};
    if (which == "zero2") {
        auto h = zero2_coordinate_change();
        body["first_stage"] = Json{{"source", "III.2 with the second and third factors swapped"},
                                   {"maps", Json{to_json(h[0]), to_json(h[1]), to_json(h[2])}},
                                   {"result", to_json(zero2_intermediate())},
                                   {"expected", to_json(zero2_intermediate_expected())}};
    }
    bool ok = body["transcript"]["verified"].get<bool>();
    return {body, ok ? 0 : 1};
}

int fail_with(const std::string& code, const std::string& detail) {
    std::cerr << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for matrix pencils and triangular tensor network varieties", "pencil-tns"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "seed for every random choice");
    app.add_option("--modulus", g.modulus, "prime for finite-field rank computations");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", g.out, "write output to this file");

    std::function<Outcome()> run;

    auto* kron = app.add_subcommand("kronecker", "Kronecker invariants of a pencil file");
    std::string kron_file;
    kron->add_option("file", kron_file, "pencil JSON")->required();
    kron->callback([&] { run = [&] { return cmd_kronecker(kron_file); }; });

    auto* tns = app.add_subcommand("tns", "dimensions, defects, samples and oracles of triangle networks");
    tns->require_subcommand(1);
    ConfigFlags tns_cfg;
    std::string network_file;
    std::size_t seeds = 5, m_max = 3, m12_max = 3;
    for (const char* name : {"dim", "defect", "sample", "oracle"}) {
        auto* sub = tns->add_subcommand(name);
        tns_cfg.attach(sub);
        sub->add_option("--seeds", seeds, "number of oracle seeds");
        if (std::string(name) == "oracle") sub->add_option("--network", network_file, "network JSON instead of a triangle");
        sub->callback([&, name] { run = [&, name] { return cmd_tns(name, tns_cfg, network_file, seeds, g); }; });
    }
    auto* sweep = tns->add_subcommand("sweep", "formula against oracle over a grid of configurations");
    sweep->add_option("--m-max", m_max);
    sweep->add_option("--m12-max", m12_max);
    sweep->add_option("--seeds", seeds, "number of oracle seeds");
    sweep->callback([&] { run = [&] { return cmd_sweep(m_max, m12_max, seeds, g); }; });

    auto* member = app.add_subcommand("member", "membership tests");
    std::string test, member_file;
    MemberFlags mf;
    member->add_option("test", test, "crl | rankdrop | ruppert | tns333 | schofield | ann")
        ->required()
        ->check(CLI::IsMember({"crl", "rankdrop", "ruppert", "tns333", "schofield", "ann"}));
    member->add_option("file", member_file, "tensor, pencil or cubic JSON")->required();
    mf.config.attach(member);
    member->add_option("--kappa", mf.kappa);
    member->add_option("--r", mf.r, "rank threshold");
    member->add_option("--min-points", mf.min_points);
    member->add_option("--q", mf.q);
    member->add_option("--draws", mf.draws, "random auxiliary tensors");
    member->add_option("--slot", mf.slot, "flattening slot for a tensor input");
    member->add_option("--acting", mf.acting, "acting slots")->delimiter(',');
    member->add_option("--expect", mf.expect, "expected annihilator dimension");
    member->callback([&] { run = [&] { return cmd_member(test, member_file, mf, g); }; });

    auto* degen = app.add_subcommand("degenerate", "verify explicit degenerations");
    degen->require_subcommand(1);
    auto* verify = degen->add_subcommand("verify");
    std::string which, lambda = "0";
    verify->add_option("case", which, "iii2 | iv2 | zero2 | restriction")->required();
    verify->add_option("--lambda", lambda, "parameter for the restriction case");
    verify->callback([&] { run = [&] { return cmd_degenerate(which, lambda); }; });

    try {
        app.parse(normalize_args(argc, argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (g.modulus != Fp::kDefaultModulus) Fp::check_modulus(g.modulus);
        Outcome o = run();
        write(o, g);
        return o.code;
    } catch (const InputError& e) {
        return fail_with(e.code(), e.what());
    } catch (const Error& e) {
        return fail_with(e.code(), e.what());
    } catch (const Json::exception& e) {
        return fail_with("input", e.what());
    } catch (const std::exception& e) {
        return fail_with("internal", e.what());
    }
}
