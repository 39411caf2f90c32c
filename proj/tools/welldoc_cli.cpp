#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "welldoc/morphism.hpp"
#include "welldoc/prng.hpp"
#include "welldoc/welldoc.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitNotProlongable = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitRuntimeError = 5;

struct Options {
    std::string morphism_text;
    std::string morphism_file;
    std::size_t horizon = 100'000;
    std::size_t lmax = 5;
    unsigned long long mmax = 6;
    std::string format = "text";
    std::string out_path;
    std::string target = "0";
    std::vector<std::string> lcg_quads;
    std::size_t samples = 0;
    std::size_t coverage_dim = 0;
    bool binary_output = false;
};

void add_morphism_flags(CLI::App* cmd, Options& opt) {
    auto* inline_opt = cmd->add_option("-m,--morphism", opt.morphism_text,
                                       "Morphism, e.g. \"3;0->02;1->101;2->102\"");
    auto* file_opt = cmd->add_option("-f,--file", opt.morphism_file,
                                     "File with a morphism (text or JSON form)");
    inline_opt->excludes(file_opt);
}

welldoc::Morphism load_morphism(const Options& opt) {
    std::string text = opt.morphism_text;
    if (!opt.morphism_file.empty()) {
        std::ifstream in(opt.morphism_file);
        if (!in) throw std::invalid_argument("cannot open file " + opt.morphism_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    }
    if (text.empty()) throw std::invalid_argument("no morphism given (use -m or -f)");
    if (text.find('{') != std::string::npos) return welldoc::Morphism::from_json(text);
    return welldoc::Morphism::parse(text);
}

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.out_path.empty()) return std::cout;
    file.open(opt.out_path, opt.binary_output ? std::ios::binary : std::ios::out);
    if (!file) throw std::invalid_argument("cannot open output file " + opt.out_path);
    return file;
}

int cmd_generate(const Options& opt) {
    auto phi = load_morphism(opt);
    if (!phi.is_prolongable(0)) {
        std::cerr << "error: morphism is not prolongable on 0\n";
        return kExitNotProlongable;
    }
    welldoc::Word w = welldoc::fixed_point_prefix(phi, 0, opt.horizon);
    std::ofstream file;
    open_output(opt, file) << welldoc::word_to_string(w) << "\n";
    return 0;
}

int cmd_decide(const Options& opt) {
    auto phi = load_morphism(opt);
    auto verdict = welldoc::decide_welldoc(phi);
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    if (opt.format == "json") {
        os << verdict.to_json(phi) << "\n";
    } else {
        os << "verdict: " << welldoc::verdict_name(verdict.verdict) << "\n"
           << "recurrent: " << (verdict.recurrence.recurrent ? "yes" : "no") << "\n"
           << "det: " << verdict.determinant << "\n";
        if (verdict.returns) {
            os << "returns to 0:";
            for (const auto& r : verdict.returns->words)
                os << " " << welldoc::word_to_string(r);
            os << "\n";
        }
        if (verdict.generation) {
            os << "returns generate Z^sigma: "
               << (verdict.generation->generates ? "yes" : "no");
            if (verdict.generation->failing_prime)
                os << " (fails at prime " << *verdict.generation->failing_prime << ")";
            os << "\n";
        }
        for (const auto& reason : verdict.reasons) os << "reason: " << reason << "\n";
    }
    return verdict.verdict == welldoc::Verdict::Welldoc ? 0 : 1;
}

int cmd_verify(const Options& opt) {
    auto phi = load_morphism(opt);
    auto report = welldoc::empirical_welldoc(phi, opt.lmax, opt.mmax, opt.horizon);
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    if (opt.format == "json") {
        os << report.to_json(phi) << "\n";
    } else {
        const char* name =
            report.verdict == welldoc::EmpiricalVerdict::ConsistentWithWelldoc
                ? "CONSISTENT-WITH-WELLDOC"
                : (report.verdict == welldoc::EmpiricalVerdict::Falsified ? "FALSIFIED"
                                                                          : "INCONCLUSIVE");
        os << "verdict: " << name << "\n";
        if (report.first_falsified) {
            const auto& c = report.cells[*report.first_falsified];
            os << "falsified at u=" << welldoc::word_to_string(c.factor)
               << " m=" << c.modulus << " witness=(";
            for (std::size_t i = 0; i < c.witness->size(); ++i)
                os << (i ? "," : "") << (*c.witness)[i];
            os << ")\n";
        }
        for (const auto& c : report.cells) {
            os << "u=" << welldoc::word_to_string(c.factor) << " m=" << c.modulus
               << " coverage=" << c.observed << "/" << c.space << "\n";
        }
    }
    switch (report.verdict) {
        case welldoc::EmpiricalVerdict::ConsistentWithWelldoc: return 0;
        case welldoc::EmpiricalVerdict::Falsified: return 1;
        case welldoc::EmpiricalVerdict::Inconclusive: return kExitInconclusive;
    }
    return kExitRuntimeError;
}

int cmd_returns(const Options& opt) {
    auto phi = load_morphism(opt);
    welldoc::ReturnSet rs;
    if (opt.target == "0") {
        rs = welldoc::returns_complete(phi);
    } else {
        welldoc::PrefixStream w(phi, 0);
        rs = welldoc::returns_by_scan(w, welldoc::word_from_string(opt.target), opt.horizon);
    }
    std::ofstream file;
    open_output(opt, file) << rs.to_json() << "\n";
    return 0;
}

int cmd_prng(const Options& opt) {
    auto phi = load_morphism(opt);
    if (opt.lcg_quads.size() != phi.sigma()) {
        std::cerr << "error: need exactly " << phi.sigma()
                  << " --lcg quadruples (one per letter), got " << opt.lcg_quads.size()
                  << "\n";
        return kExitParseError;
    }
    std::vector<welldoc::LcgParams> params;
    for (const auto& quad : opt.lcg_quads) params.push_back(welldoc::LcgParams::parse(quad));

    welldoc::CombinedStream stream(welldoc::PrefixStream(phi, 0), params);
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    for (std::size_t n = 0; n < opt.samples; ++n) {
        std::uint64_t v = stream.next();
        if (opt.binary_output) {
            unsigned char bytes[8];
            for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
            os.write(reinterpret_cast<const char*>(bytes), 8);
        } else {
            os << v << "\n";
        }
    }
    if (opt.coverage_dim > 0) {
        welldoc::CombinedStream fresh(welldoc::PrefixStream(phi, 0), params);
        auto cov = welldoc::tuple_coverage(fresh, opt.coverage_dim,
                                           std::max(opt.samples, opt.coverage_dim));
        std::ostream& report = opt.binary_output ? std::cerr : os;
        report << "coverage d=" << opt.coverage_dim << ": " << cov.fraction << " ("
               << cov.distinct << " tuples, " << cov.missing << " missing)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morphic-word WELLDOC toolkit: fixed points, return words, the "
                 "well-distributed-occurrences decision, empirical verification, and "
                 "word-combined LCG streams"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("WELLDOC_HORIZON")) opt.horizon = std::stoull(env);

    auto* generate = app.add_subcommand("generate", "Print a prefix of the fixed point");
    add_morphism_flags(generate, opt);
    generate->add_option("-n,--horizon", opt.horizon, "Number of symbols");
    generate->add_option("--out", opt.out_path, "Output path");

    auto* decide = app.add_subcommand("decide", "Decide the WELLDOC property");
    add_morphism_flags(decide, opt);
    decide->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    decide->add_option("--out", opt.out_path, "Output path");

    auto* verify = app.add_subcommand("verify", "Empirical WELLDOC verification");
    add_morphism_flags(verify, opt);
    verify->add_option("-n,--horizon", opt.horizon, "Scan horizon");
    verify->add_option("--lmax", opt.lmax, "Max factor length");
    verify->add_option("--mmax", opt.mmax, "Max modulus");
    verify->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", opt.out_path, "Output path");

    auto* returns = app.add_subcommand("returns", "Enumerate return words");
    add_morphism_flags(returns, opt);
    returns->add_option("--target", opt.target,
                        "Target factor (default 0: certified complete set)");
    returns->add_option("-n,--horizon", opt.horizon, "Scan horizon for non-0 targets");
    returns->add_option("--out", opt.out_path, "Output path");

    auto* prng = app.add_subcommand("prng", "Word-combined LCG sample stream");
    add_morphism_flags(prng, opt);
    prng->add_option("--lcg", opt.lcg_quads, "Per-letter LCG as a,c,m,seed (repeat per letter)");
    prng->add_option("-n,--samples", opt.samples, "Number of samples");
    prng->add_option("--coverage", opt.coverage_dim, "Append d-tuple coverage summary");
    prng->add_flag("--binary", opt.binary_output, "Emit little-endian 64-bit samples");
    prng->add_option("--out", opt.out_path, "Output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(opt);
        if (decide->parsed()) return cmd_decide(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (returns->parsed()) return cmd_returns(opt);
        if (prng->parsed()) return cmd_prng(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotProlongable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return kExitRuntimeError;
}
