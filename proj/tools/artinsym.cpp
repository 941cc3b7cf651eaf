// Command-line front end: expand, verify, hecke, dirichlet, eval, providers.

#include "artinsym/artin.hpp"
#include "artinsym/dirichlet.hpp"
#include "artinsym/hecke.hpp"
#include "artinsym/parallel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using namespace artinsym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SessionConfig {
    std::string extension = "rational";
    std::string character = "trivial";
    std::string basis = "hl_Pn";
    std::uint64_t bound = 50;
    int n = 2;
    std::string format = "tsv";
    std::uint64_t seed = 20240601;
    unsigned workers = 0;
    std::string cache_dir;
};

std::string canonical_extension(const std::string& s)
{
    if (s == "Q" || s == "QQ" || s == "rational")
        return "rational";
    return s;
}

ProviderPtr resolve_provider(const SessionConfig& cfg)
{
    try {
        return make_provider(canonical_extension(cfg.extension));
    } catch (const ProviderError& e) {
        throw UsageError(e.what());
    } catch (const GroupError& e) {
        throw UsageError(e.what());
    }
}

CharacterData resolve_character(const ProviderPtr& provider, const std::string& name)
{
    try {
        return provider->character(name);
    } catch (const std::exception& e) {
        std::string known;
        for (const auto& c : provider->characters())
            known += " " + c.name;
        throw UsageError("unknown character '" + name + "' for " + provider->name() + " (known:" + known +
                         ", regular, lin:k, order:k)");
    }
}

Basis resolve_basis(const std::string& s)
{
    try {
        return parse_basis(s);
    } catch (const std::exception&) {
        throw UsageError("unknown basis '" + s + "'");
    }
}

void check_config(const SessionConfig& cfg)
{
    if (cfg.bound < 1)
        throw UsageError("--bound must be at least 1");
    if (cfg.n < 1)
        throw UsageError("--n must be at least 1");
    if (cfg.format != "tsv" && cfg.format != "jsonl")
        throw UsageError("--format must be tsv or jsonl");
}

/* file-backed cache of deterministic outputs, keyed by the canonical request */
std::string cache_dir(const SessionConfig& cfg)
{
    if (!cfg.cache_dir.empty())
        return cfg.cache_dir;
    if (const char* env = std::getenv("ARTINSYM_CACHE_DIR"))
        return env;
    return {};
}

std::string cache_file(const std::string& dir, std::string key)
{
    for (char& c : key)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.')
            c = '_';
    return (std::filesystem::path(dir) / (key + ".txt")).string();
}

template <class F>
std::string cached(const SessionConfig& cfg, const std::string& key, F&& compute)
{
    std::string dir = cache_dir(cfg);
    if (dir.empty())
        return compute();
    std::string path = cache_file(dir, key);
    if (std::ifstream in(path); in) {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::string out = compute();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string tmp = path + ".tmp";
    if (std::ofstream o(tmp); o) {
        o << out;
        o.close();
        std::filesystem::rename(tmp, path, ec);
    }
    return out;
}

std::string fmt_double(double x, int digits = 12)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string fmt_complex(std::complex<double> z)
{
    if (z.imag() == 0)
        return fmt_double(z.real());
    return fmt_double(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_double(std::abs(z.imag())) + "i";
}

std::complex<double> parse_complex(const std::string& s)
{
    static const std::regex re(R"(\s*([+-]?[0-9.eE]+(?:[eE][+-]?[0-9]+)?)\s*(?:([+-])\s*([0-9.eE]+(?:[eE][+-]?[0-9]+)?)?\s*[ij])?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw UsageError("cannot parse complex number '" + s + "'");
    double re_part = std::stod(m[1].str()), im = 0;
    if (m[2].matched)
        im = (m[3].matched ? std::stod(m[3].str()) : 1.0) * (m[2].str() == "-" ? -1 : 1);
    return {re_part, im};
}

/* "(2,1)" at a given rational prime, or "{2:(1,1),3:(1)}" */
MultiPartition parse_multipartition(const std::string& s, std::uint64_t prime)
{
    static const std::regex entry(R"((\d+):\(([\d,\s]*)\))");
    try {
        if (s.find(':') == std::string::npos)
            return MultiPartition({{PrimeKey::rational_prime(prime), Partition::parse(s)}});
        std::vector<MultiPartition::Entry> entries;
        for (auto it = std::sregex_iterator(s.begin(), s.end(), entry); it != std::sregex_iterator(); ++it)
            entries.emplace_back(PrimeKey::rational_prime(std::stoull((*it)[1].str())),
                                 Partition::parse((*it)[2].str()));
        if (entries.empty())
            throw std::invalid_argument("no entries");
        return MultiPartition(std::move(entries));
    } catch (const std::exception&) {
        throw UsageError("cannot parse multipartition '" + s + "'");
    }
}

bool is_prime(std::uint64_t p)
{
    auto ps = primes_up_to(p);
    return !ps.empty() && ps.back() == p;
}

/* ---------------------------------------------------------------- commands */

int cmd_expand(const SessionConfig& cfg)
{
    auto provider = resolve_provider(cfg);
    auto chi = resolve_character(provider, cfg.character);
    Basis b = resolve_basis(cfg.basis);
    std::string key = "expand-" + provider->name() + "-" + chi.name + "-" + basis_name(b) + "-" +
                      std::to_string(cfg.bound) + "-" + cfg.format;
    std::cout << cached(cfg, key, [&] {
        FieldContext K(provider);
        auto series = artin_series(chi, K, cfg.bound, b);
        if (cfg.format == "tsv")
            return series.dump(provider->name(), chi.name);
        std::string out;
        for (const auto& [lam, c] : series.expand()) {
            nlohmann::json j;
            j["multipartition"] = nlohmann::json::parse(lam.json());
            j["norm"] = lam.norm();
            j["coefficient"] = nlohmann::json::parse(c.json());
            out += j.dump() + "\n";
        }
        return out;
    });
    return kExitOk;
}

struct VerifyLine {
    std::string kind, instance;
    bool pass;
    std::size_t compared;
    std::string detail;
};

void print_verify(const SessionConfig& cfg, const VerifyLine& v)
{
    if (cfg.format == "jsonl") {
        nlohmann::json j = {{"kind", v.kind},         {"instance", v.instance}, {"pass", v.pass},
                            {"compared", v.compared}, {"detail", v.detail}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (v.pass ? "PASS" : "FAIL") << "\t" << v.kind << "\t" << v.instance << "\t" << v.compared;
        if (!v.detail.empty())
            std::cout << "\t" << v.detail;
        std::cout << "\n";
    }
}

int cmd_verify(const SessionConfig& cfg, std::vector<std::string> kinds, const std::string& suite)
{
    Basis b = resolve_basis(cfg.basis);
    std::vector<ProviderPtr> providers;
    if (!suite.empty()) {
        if (suite != "core")
            throw UsageError("unknown suite '" + suite + "' (expected core)");
        kinds = identity_kinds();
        kinds.push_back("satake");
        providers = {make_provider("cyclotomic:12"), make_provider("cubic-s3:2")};
    } else {
        if (kinds.empty())
            throw UsageError("verify needs identity names or --suite core");
        providers = {resolve_provider(cfg)};
    }
    const auto& known = identity_kinds();
    for (const auto& k : kinds)
        if (k != "satake" && std::find(known.begin(), known.end(), k) == known.end())
            throw UsageError("unknown identity '" + k + "'");

    bool all = true;
    std::size_t lines = 0;
    for (const auto& k : kinds) {
        if (k == "satake") {
            std::vector<int> ns;
            if (suite.empty())
                ns = {cfg.n};
            else
                ns = {1, 2, 3};
            std::uint64_t bound = suite.empty() ? cfg.bound : std::min<std::uint64_t>(cfg.bound, 36);
            for (int n : ns) {
                auto r = verify_satake(n, bound, cfg.seed, 20);
                print_verify(cfg, {r.kind, r.instance, r.pass, r.compared, r.detail});
                all &= r.pass;
                ++lines;
            }
            continue;
        }
        for (const auto& p : providers)
            for (const auto& r : verify_identity(k, p, cfg.bound, b)) {
                print_verify(cfg, {r.kind, r.instance, r.pass, r.compared, r.detail});
                all &= r.pass;
                ++lines;
            }
    }
    if (lines == 0) {
        std::cerr << "no instances available for the requested identities\n";
        return kExitFailed;
    }
    return all ? kExitOk : kExitFailed;
}

int cmd_hecke_convolve(const SessionConfig& cfg, std::uint64_t prime, const std::string& a, const std::string& b)
{
    if (!is_prime(prime))
        throw UsageError("--prime must be a prime");
    Partition la, lb;
    try {
        la = Partition::parse(a);
        lb = Partition::parse(b);
    } catch (const std::exception&) {
        throw UsageError("cannot parse partitions");
    }
    if (la.length() > cfg.n || lb.length() > cfg.n)
        throw UsageError("partitions longer than --n");
    for (const auto& [nu, c] : local_convolution(la, lb, prime, cfg.n)) {
        if (c == 0)
            continue;
        if (cfg.format == "jsonl") {
            nlohmann::json j = {{"nu", nu.parts()}, {"coefficient", to_string(c)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << nu.str() << "\t" << to_string(c) << "\n";
        }
    }
    return kExitOk;
}

int cmd_hecke_weight(const SessionConfig& cfg, const std::string& which, const std::string& part,
                     std::uint64_t prime)
{
    if (!is_prime(prime))
        throw UsageError("--prime must be a prime");
    auto lam = parse_multipartition(part, prime);
    Rational v;
    if (which == "kappa") {
        if (lam.length() > cfg.n)
            throw UsageError("multipartition longer than --n");
        v = kappa(lam, cfg.n);
    } else {
        v = gamma(lam);
    }
    if (cfg.format == "jsonl") {
        nlohmann::json j = {{"multipartition", nlohmann::json::parse(lam.json())}, {which, to_string(v)}};
        if (which == "kappa")
            j["n"] = cfg.n;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string(v) << "\n";
    }
    return kExitOk;
}

int cmd_dirichlet(const SessionConfig& cfg, bool stable, bool with_float)
{
    auto provider = resolve_provider(cfg);
    auto chi = resolve_character(provider, cfg.character);
    std::string key = std::string("dirichlet-") + (stable ? "stable" : "n" + std::to_string(cfg.n)) + "-" +
                      provider->name() + "-" + chi.name + "-" + std::to_string(cfg.bound) + "-" + cfg.format +
                      (with_float ? "-f" : "");
    std::cout << cached(cfg, key, [&] {
        FieldContext K(provider);
        auto d = stable ? stable_coefficients(chi, K, cfg.bound) : mellin_truncated(chi, K, cfg.n, cfg.bound);
        std::string out;
        if (cfg.format == "tsv")
            out += with_float ? "N\tcoefficient\tfloat\n" : "N\tcoefficient\n";
        for (std::uint64_t N = 1; N <= d.bound; ++N) {
            const auto& c = d.at(N);
            if (cfg.format == "jsonl") {
                nlohmann::json j = {{"N", N}, {"coefficient", nlohmann::json::parse(c.json())}};
                if (with_float)
                    j["float"] = fmt_complex(c.to_complex());
                out += j.dump() + "\n";
            } else {
                out += std::to_string(N) + "\t" + c.str();
                if (with_float)
                    out += "\t" + fmt_complex(c.to_complex());
                out += "\n";
            }
        }
        return out;
    });
    return kExitOk;
}

void print_value(const SessionConfig& cfg, const std::string& what, const NumericValue& v)
{
    if (cfg.format == "jsonl") {
        nlohmann::json j = {{"quantity", what},
                            {"re", v.value.real()},
                            {"im", v.value.imag()},
                            {"error_bound", v.error_bound}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << what << "\t" << fmt_complex(v.value) << " ± " << fmt_double(v.error_bound, 3) << "\n";
    }
}

int cmd_eval(const SessionConfig& cfg, const std::string& s_text, std::uint64_t prime_bound, int shifts,
             bool dtilde, bool gap)
{
    if (dtilde) {
        print_value(cfg, "residue", residue_dtilde());
        return kExitOk;
    }
    if (s_text.empty())
        throw UsageError("eval needs --s or --dtilde");
    auto s = parse_complex(s_text);
    auto provider = resolve_provider(cfg);
    auto chi = resolve_character(provider, cfg.character);
    FieldContext K(provider);
    try {
        if (gap) {
            double g = functional_equation_gap(chi, K, s, prime_bound, std::max(shifts, 1));
            print_value(cfg, "gap", NumericValue{g, 0.0});
        } else if (shifts >= 0) {
            print_value(cfg, "L_tilde", numeric_L_tilde(chi, K, s, prime_bound, shifts));
        } else {
            print_value(cfg, "L", numeric_L(chi, K, s, prime_bound));
        }
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return kExitOk;
}

int cmd_providers(const SessionConfig& cfg)
{
    const std::vector<std::string> examples = {"rational", "quadratic:-1", "quadratic:5", "cyclotomic:5",
                                               "cyclotomic:12", "cubic-s3:2"};
    for (const auto& name : examples) {
        auto p = make_provider(name);
        std::vector<std::string> chars;
        for (const auto& c : p->characters())
            chars.push_back(c.name);
        if (cfg.format == "jsonl") {
            nlohmann::json j = {{"extension", name}, {"group_order", p->group()->order()}, {"characters", chars}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << name << "\t|G|=" << p->group()->order() << "\t";
            for (std::size_t i = 0; i < chars.size(); ++i)
                std::cout << (i ? "," : "") << chars[i];
            std::cout << "\n";
        }
    }
    if (cfg.format == "tsv")
        std::cout << "table:<path>\tJSON Galois table (see README)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Artin symmetric functions, Hecke algebras and Dirichlet series"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML/INI configuration file; command-line flags win");

    SessionConfig cfg;
    app.add_option("--extension,--field", cfg.extension,
                   "rational|Q, quadratic:d, cyclotomic:m, cubic-s3:a or table:path")
        ->capture_default_str();
    app.add_option("--character", cfg.character, "character name")->capture_default_str();
    app.add_option("--basis", cfg.basis, "m, h, e, p, s, f, hl_P, hl_Q, hl_Pn, hl")->capture_default_str();
    app.add_option("--bound", cfg.bound, "norm bound B")->capture_default_str();
    app.add_option("--n", cfg.n, "rank n")->capture_default_str();
    app.add_option("--format", cfg.format, "tsv or jsonl")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--cache-dir", cfg.cache_dir, "output cache directory (default $ARTINSYM_CACHE_DIR)");

    auto* expand = app.add_subcommand("expand", "print the Artin symmetric function as a series dump");

    auto* verify = app.add_subcommand("verify", "check identities; exit 1 on any failure");
    std::vector<std::string> kinds;
    std::string suite;
    verify->add_option("identities", kinds, "identity names, or satake");
    verify->add_option("--suite", suite, "named suite (core)");

    auto* hecke = app.add_subcommand("hecke", "spherical Hecke algebra computations");
    hecke->require_subcommand(1);
    std::uint64_t prime = 2;
    std::string part_a, part_b, part;
    auto* conv = hecke->add_subcommand("convolve", "expand 1_a * 1_b at one prime");
    conv->add_option("--prime", prime)->capture_default_str();
    conv->add_option("--a", part_a)->required();
    conv->add_option("--b", part_b)->required();
    auto* kap = hecke->add_subcommand("kappa", "the weight kappa^(n)");
    auto* gam = hecke->add_subcommand("gamma", "the limiting weight gamma");
    for (auto* sc : {kap, gam}) {
        sc->add_option("--part", part, "partition at --prime, or {p:(..),q:(..)}")->required();
        sc->add_option("--prime", prime)->capture_default_str();
    }

    auto* dirichlet = app.add_subcommand("dirichlet", "Dirichlet coefficients of the truncated or stable product");
    bool stable = false, with_float = false;
    dirichlet->add_flag("--stable", stable, "stable coefficients instead of rank --n");
    dirichlet->add_flag("--float", with_float, "append a floating-point column");

    auto* eval = app.add_subcommand("eval", "numeric Euler products for Re s > 1");
    std::string s_text;
    std::uint64_t prime_bound = 100000;
    int shifts = -1;
    bool dtilde = false, gap = false;
    eval->add_option("--s", s_text, "complex argument, e.g. 2 or 2.5+1i");
    eval->add_option("--prime-bound", prime_bound)->capture_default_str();
    eval->add_option("--shifts", shifts, "evaluate the product of L(s+j), j = 0..shifts");
    eval->add_flag("--dtilde", dtilde, "residue of the stable zeta product at s = 1");
    eval->add_flag("--gap", gap, "functional-equation gap with matched truncation");

    auto* providers = app.add_subcommand("providers", "list built-in extensions and their characters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        check_config(cfg);
        set_worker_count(cfg.workers);
        if (*expand)
            return cmd_expand(cfg);
        if (*verify)
            return cmd_verify(cfg, kinds, suite);
        if (*conv)
            return cmd_hecke_convolve(cfg, prime, part_a, part_b);
        if (*kap)
            return cmd_hecke_weight(cfg, "kappa", part, prime);
        if (*gam)
            return cmd_hecke_weight(cfg, "gamma", part, prime);
        if (*dirichlet)
            return cmd_dirichlet(cfg, stable, with_float);
        if (*eval)
            return cmd_eval(cfg, s_text, prime_bound, shifts, dtilde, gap);
        if (*providers)
            return cmd_providers(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ProviderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
