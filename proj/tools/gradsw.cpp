// gradsw: command-line front end for building, switching and checking gradings.

#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "gradsw/algebra/universal.hpp"
#include "gradsw/catalog/catalog.hpp"
#include "gradsw/identities/identities.hpp"
#include "gradsw/io/json_io.hpp"
#include "gradsw/switch/switch.hpp"

#ifndef GRADSW_VERSION
#define GRADSW_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using namespace gradsw;
using io::json;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kHypothesis = 2, kIo = 3 };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw IoError("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return ss.str();
}

// Writes through a temporary file in the same directory, then renames.
void write_atomic(const std::string& path, const std::string& text) {
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out) throw IoError("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("cannot rename to " + path + ": " + ec.message());
    }
}

/// Collects input digests and timing for the manifest of one command run.
class Run {
public:
    Run(std::string command, json parameters)
        : command_(std::move(command)), params_(std::move(parameters)), start_(std::chrono::steady_clock::now()) {}

    json load(const std::string& role, const std::string& path) {
        const auto text = read_file(path);
        inputs_[role] = {{"path", path}, {"sha256", sha256_hex(text)}};
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw SchemaError("", path + ": " + e.what());
        }
    }

    // The payload digest covers the document without its manifest.
    json stamp(json doc) const {
        const auto payload = doc.dump();
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        doc["manifest"] = {{"command", command_},
                           {"parameters", params_},
                           {"version", GRADSW_VERSION},
                           {"inputs", inputs_},
                           {"payload_sha256", sha256_hex(payload)},
                           {"timing_ms", ms}};
        return doc;
    }

    void emit(json doc, const std::string& path) const {
        const auto text = stamp(std::move(doc)).dump(2) + "\n";
        if (path.empty() || path == "-")
            std::cout << text;
        else
            write_atomic(path, text);
    }

private:
    std::string command_;
    json params_;
    json inputs_ = json::object();
    std::chrono::steady_clock::time_point start_;
};

json report_json(const GradingReport& r) {
    json out = {{"ok", r.ok}, {"reason", r.reason}};
    if (r.witness)
        out["witness"] = {{"component_g", r.witness->component_g},
                          {"component_h", r.witness->component_h},
                          {"vector_a", r.witness->vector_a},
                          {"vector_b", r.witness->vector_b}};
    return out;
}

json plan_json(const SwitchPlan& p) {
    return {{"variant", to_string(p.variant)},
            {"degree", io::group_element_json(p.degree)},
            {"modulus", p.modulus},
            {"nilpotency_index", p.nilpotency_index},
            {"r", p.r},
            {"h_exponents", p.h_exponents},
            {"eigenvalues", p.eigenvalues},
            {"block_sizes", p.block_sizes}};
}

/// An algebra document and a grading document brought to a common field: an
/// F_p side is extended to the field of the other side.
template <class Fn>
auto with_pair(const json& adoc, const json& gdoc, Fn&& fn) {
    io::check_header(adoc, "algebra");
    io::check_header(gdoc, "grading");
    const auto af = io::parse_field(adoc);
    const auto gf = io::parse_field(gdoc);
    const auto p_of = [](const io::AnyField& f) {
        return std::visit([](const auto& x) { return x.characteristic(); }, f);
    };
    if (p_of(af) != p_of(gf)) throw SchemaError("/p", "algebra and grading have different characteristic");
    if (auto* pa = std::get_if<PrimeField>(&af)) {
        auto a = io::parse_algebra(*pa, adoc);
        if (auto* pg = std::get_if<PrimeField>(&gf)) return fn(a, io::parse_grading(*pg, gdoc));
        const auto& K = std::get<ExtensionField>(gf);
        return fn(extend_scalars(a, K), io::parse_grading(K, gdoc));
    }
    const auto& K = std::get<ExtensionField>(af);
    auto a = io::parse_algebra(K, adoc);
    if (auto* pg = std::get_if<PrimeField>(&gf)) return fn(a, extend_scalars(io::parse_grading(*pg, gdoc), K));
    const auto& K2 = std::get<ExtensionField>(gf);
    if (!(K == K2)) throw SchemaError("/field_modulus", "algebra and grading are over different extension fields");
    return fn(a, io::parse_grading(K, gdoc));
}

template <class Fn>
auto with_grading(const json& gdoc, Fn&& fn) {
    io::check_header(gdoc, "grading");
    return std::visit([&](const auto& f) { return fn(io::parse_grading(f, gdoc)); }, io::parse_field(gdoc));
}

template <class F>
std::size_t resolve(const Algebra<F>& a, const io::AlgebraInfo& info, const std::string& name) {
    if (auto it = info.aliases.find(name); it != info.aliases.end()) return it->second;
    if (auto i = a.index_of(name)) return *i;
    throw InvalidArgument("unknown basis element or alias '" + name + "'");
}

/// "ad:<name>" or "adpow:<name>:<e>" with e a power of p.
template <class F>
Matrix<F> parse_derivation(const Algebra<F>& a, const io::AlgebraInfo& info, const std::string& spec) {
    if (spec.rfind("ad:", 0) == 0) return ad_basis(a, resolve(a, info, spec.substr(3)));
    if (spec.rfind("adpow:", 0) == 0) {
        const auto rest = spec.substr(6);
        const auto colon = rest.rfind(':');
        if (colon == std::string::npos || colon == 0) throw InvalidArgument("expected adpow:<name>:<exponent>");
        std::uint64_t e = 0;
        const auto digits = rest.substr(colon + 1);
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
        if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
            throw InvalidArgument("bad exponent in '" + spec + "'");
        return power_derivation(ad_basis(a, resolve(a, info, rest.substr(0, colon))), e);
    }
    throw InvalidArgument("derivation must be ad:<name> or adpow:<name>:<exponent>, got '" + spec + "'");
}

/// Projection to Z/M through the one generator carrying the degree of d.
template <class F>
Grading<F> coarsen_for(const Grading<F>& gr, const Matrix<F>& d, std::int64_t m) {
    const auto& G = gr.group();
    const auto deg = graded_derivation_degree(gr, d).degree;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < G.free_rank(); ++i)
        if (deg.free[i] != 0) support.push_back(i);
    for (std::size_t i = 0; i < G.torsion().size(); ++i)
        if (deg.torsion[i] != 0) support.push_back(G.free_rank() + i);
    if (support.empty() && G.generator_count() == 1) support.push_back(0);
    if (support.size() != 1)
        throw HypothesisError("--coarsen-mod needs the degree " + G.to_string(deg) +
                              " of D to be supported on exactly one generator of " + G.to_string() +
                              "; use the coarsen command with --project instead");
    return coarsen(gr, GroupHom::project_to_cyclic(G, support[0], m));
}

// ---- subcommands

struct BuildOpts {
    std::string name, out_algebra, out_grading;
    std::uint32_t p = 0, n = 1, m = 1;
};

int cmd_build(const BuildOpts& o) {
    Run run("build", {{"name", o.name}, {"p", o.p}, {"n", o.n}, {"m", o.m}});
    const auto c = build_catalog(o.name, o.p, o.n, o.m);
    io::AlgebraInfo info{c.name, json(c.params), c.aliases};
    run.emit(io::algebra_json(c.algebra, info), o.out_algebra);
    if (!o.out_grading.empty()) run.emit(io::grading_json(c.grading), o.out_grading);
    return kOk;
}

struct SwitchOpts {
    std::string algebra, grading, derivation, variant = "truncated", out, report;
    std::int64_t coarsen_mod = 0;
};

int cmd_switch(const SwitchOpts& o) {
    const auto variant = parse_variant(o.variant);
    Run run("switch", {{"derivation", o.derivation}, {"variant", to_string(variant)}, {"coarsen_mod", o.coarsen_mod}});
    const auto adoc = run.load("algebra", o.algebra);
    const auto gdoc = run.load("grading", o.grading);
    const auto info = io::parse_algebra_info(adoc);
    return with_pair(adoc, gdoc, [&](const auto& a, const auto& g0) {
        const auto d = parse_derivation(a, info, o.derivation);
        const auto g = o.coarsen_mod > 0 ? coarsen_for(g0, d, o.coarsen_mod) : g0;
        const auto finish = [&](const auto& res) {
            run.emit(io::grading_json(res.grading()), o.out);
            if (!o.report.empty())
                run.emit({{"schema", io::kSchemaVersion},
                          {"kind", "switch-report"},
                          {"plan", plan_json(res.plan())},
                          {"verification", report_json(res.report())}},
                         o.report);
            return kOk;
        };
        switch (variant) {
            case Variant::truncated: return finish(switch_truncated(a, g, d));
            case Variant::artin_hasse: return finish(switch_artin_hasse(a, g, d));
            case Variant::laguerre: return finish(switch_laguerre(a, g, d));
        }
        return kOk;
    });
}

struct PairOpts {
    std::string algebra, grading, out;
};

int cmd_verify(const PairOpts& o) {
    Run run("verify", json::object());
    const auto adoc = run.load("algebra", o.algebra);
    const auto gdoc = run.load("grading", o.grading);
    const auto rep = with_pair(adoc, gdoc, [](const auto& a, const auto& g) { return verify_grading(a, g); });
    run.emit({{"schema", io::kSchemaVersion}, {"kind", "verification"}, {"report", report_json(rep)}}, o.out);
    if (!rep.ok) std::cerr << "gradsw: not a grading: " << rep.reason << "\n";
    return rep.ok ? kOk : kFailed;
}

int cmd_universal(const PairOpts& o) {
    Run run("universal-group", json::object());
    const auto adoc = run.load("algebra", o.algebra);
    const auto gdoc = run.load("grading", o.grading);
    const auto u = with_pair(adoc, gdoc, [](const auto& a, const auto& g) {
        const auto rep = verify_grading(a, g);
        if (!rep.ok) throw VerificationFailure("input is not a grading: " + rep.reason);
        return universal_group(a, g);
    });
    json images = json::array();
    for (const auto& e : u.images) images.push_back(io::group_element_json(e));
    run.emit({{"free_rank", u.group.free_rank()},
              {"torsion", u.group.torsion()},
              {"support_size", u.images.size()},
              {"relations", u.relations},
              {"support_images", images}},
             o.out);
    return kOk;
}

struct CoarsenOpts {
    std::string grading, out;
    std::size_t project = 0;
    std::int64_t mod = 0;
};

int cmd_coarsen(const CoarsenOpts& o) {
    Run run("coarsen", {{"project", o.project}, {"mod", o.mod}});
    const auto gdoc = run.load("grading", o.grading);
    with_grading(gdoc, [&](const auto& g) {
        run.emit(io::grading_json(coarsen(g, GroupHom::project_to_cyclic(g.group(), o.project, o.mod))), o.out);
        return 0;
    });
    return kOk;
}

struct IntersectOpts {
    std::string first, second, out;
};

int cmd_intersect(const IntersectOpts& o) {
    Run run("intersect", json::object());
    const auto d1 = run.load("first", o.first);
    const auto d2 = run.load("second", o.second);
    io::check_header(d2, "grading");
    with_grading(d1, [&](const auto& g1) {
        using G = std::decay_t<decltype(g1)>;
        const auto f2 = io::parse_field(d2);
        G g2 = std::visit(
            [&](const auto& f) -> G {
                using F2 = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<G, Grading<F2>>) {
                    if (!(f == g1.field())) throw SchemaError("/p", "gradings are over different fields");
                    return io::parse_grading(f, d2);
                } else if constexpr (std::is_same_v<F2, PrimeField>) {
                    if (f.characteristic() != g1.field().characteristic())
                        throw SchemaError("/p", "gradings have different characteristic");
                    return extend_scalars(io::parse_grading(f, d2), g1.field());
                } else {
                    throw SchemaError("/field_degree", "list the grading over the extension field first");
                }
            },
            f2);
        run.emit(io::grading_json(intersect(g1, g2)), o.out);
        return 0;
    });
    return kOk;
}

struct IdentityOpts {
    std::uint32_t p = 0;
    std::string suite = "all", out;
    std::uint64_t seed = 0;
    std::uint32_t trials = 20;
};

int cmd_identities(const IdentityOpts& o) {
    Run run("check-identities", {{"p", o.p}, {"suite", o.suite}, {"seed", o.seed}, {"trials", o.trials}});
    SuiteOptions opt;
    opt.seed = o.seed;
    opt.trials = o.trials;
    const auto reports = run_suite(o.p, o.suite, opt);
    json arr = json::array();
    bool all = true;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        all = all && r.pass;
        std::cerr << (r.pass ? "pass " : "FAIL ") << r.identity << " " << r.parameters.dump() << "\n";
    }
    run.emit({{"schema", io::kSchemaVersion}, {"kind", "identity-report"}, {"reports", arr}}, o.out);
    return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grading switching for algebras over fields of prime characteristic"};
    app.set_version_flag("--version", GRADSW_VERSION);
    app.require_subcommand(1);

    BuildOpts bo;
    auto* build = app.add_subcommand("build", "Write a catalog algebra and its standard grading");
    build->add_option("name", bo.name, "W(1;n), H(2;(n,m);Phi(1)), O(1;n) or O(2;(n,m))")->required();
    build->add_option("--p", bo.p, "characteristic")->required();
    build->add_option("--n", bo.n, "first height")->capture_default_str();
    build->add_option("--m", bo.m, "second height")->capture_default_str();
    build->add_option("--out-algebra", bo.out_algebra, "algebra file (stdout if omitted)");
    build->add_option("--out-grading", bo.out_grading, "grading file");

    SwitchOpts so;
    auto* sw = app.add_subcommand("switch", "Switch a cyclic grading along a derivation");
    sw->add_option("--algebra", so.algebra)->required();
    sw->add_option("--grading", so.grading)->required();
    sw->add_option("--derivation", so.derivation, "ad:<name> or adpow:<name>:<p-power>")->required();
    sw->add_option("--variant", so.variant, "truncated, artin-hasse or laguerre")->capture_default_str();
    sw->add_option("--coarsen-mod", so.coarsen_mod, "first project onto Z/M through the generator carrying deg D")
        ->check(CLI::PositiveNumber);
    sw->add_option("--out", so.out, "switched grading file (stdout if omitted)");
    sw->add_option("--report", so.report, "plan and verification report file");

    PairOpts vo, uo;
    auto* verify = app.add_subcommand("verify", "Check that a decomposition is a grading");
    verify->add_option("--algebra", vo.algebra)->required();
    verify->add_option("--grading", vo.grading)->required();
    verify->add_option("--out", vo.out);
    auto* ug = app.add_subcommand("universal-group", "Universal group of a grading");
    ug->add_option("--algebra", uo.algebra)->required();
    ug->add_option("--grading", uo.grading)->required();
    ug->add_option("--out", uo.out);

    CoarsenOpts co;
    auto* cs = app.add_subcommand("coarsen", "Project a grading onto Z/M through one generator");
    cs->add_option("--grading", co.grading)->required();
    cs->add_option("--project", co.project, "generator index, free generators first")->required();
    cs->add_option("--mod", co.mod, "M, or 0 for Z")->required()->check(CLI::NonNegativeNumber);
    cs->add_option("--out", co.out);

    IntersectOpts io_;
    auto* is = app.add_subcommand("intersect", "Common refinement of two gradings");
    is->add_option("first", io_.first)->required();
    is->add_option("second", io_.second)->required();
    is->add_option("--out", io_.out);

    IdentityOpts ido;
    auto* ci = app.add_subcommand("check-identities", "Run the congruence checkers");
    ci->add_option("--p", ido.p)->required();
    ci->add_option("--suite", ido.suite)->capture_default_str()->check(CLI::IsMember(suite_names()));
    ci->add_option("--seed", ido.seed)->capture_default_str();
    ci->add_option("--trials", ido.trials)->capture_default_str();
    ci->add_option("--out", ido.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kIo;
    }

    try {
        if (*build) return cmd_build(bo);
        if (*sw) return cmd_switch(so);
        if (*verify) return cmd_verify(vo);
        if (*ug) return cmd_universal(uo);
        if (*cs) return cmd_coarsen(co);
        if (*is) return cmd_intersect(io_);
        if (*ci) return cmd_identities(ido);
    } catch (const SchemaError& e) {
        std::cerr << "gradsw: schema error at " << e.what() << "\n";
        return kIo;
    } catch (const IoError& e) {
        std::cerr << "gradsw: " << e.what() << "\n";
        return kIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "gradsw: " << e.what() << "\n";
        return kIo;
    } catch (const VerificationFailure& e) {
        std::cerr << "gradsw: verification failed: " << e.what() << "\n";
        return kFailed;
    } catch (const InternalInconsistency& e) {
        std::cerr << "gradsw: internal inconsistency: " << e.what() << "\n";
        return kFailed;
    } catch (const HypothesisError& e) {
        std::cerr << "gradsw: hypothesis not satisfied: " << e.what() << "\n";
        return kHypothesis;
    } catch (const Error& e) {
        std::cerr << "gradsw: " << e.what() << "\n";
        return kHypothesis;
    } catch (const json::exception& e) {
        std::cerr << "gradsw: malformed JSON: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}
