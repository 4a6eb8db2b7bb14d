#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permdes/harness.hpp"
#include "permdes/matching.hpp"
#include "permdes/perm.hpp"
#include "permdes/polynomial.hpp"
#include "permdes/vincular.hpp"

namespace {

using nlohmann::ordered_json;
using namespace permdes;

constexpr const char* kSchemaVersion = "1.0";
constexpr int kBruteBound = 9;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        size_t used = 0;
        out.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad list entry: " + tok);
        pos = comma + 1;
    }
    return out;
}

ordered_json envelope(const std::string& command, ordered_json inputs, ordered_json result) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json profile_json(const Permutation& sigma) {
    const StatProfile p = stat_profile(sigma);
    ordered_json j;
    j["n"] = sigma.size();
    j["des"] = p.des;
    j["asc"] = p.asc;
    j["destop"] = p.destop;
    j["desbot"] = p.desbot;
    j["asctop"] = p.asctop;
    j["ascbot"] = p.ascbot;
    j["peak"] = p.peak;
    j["valley"] = p.valley;
    j["lrmax"] = p.lrmax;
    j["lrmin"] = p.lrmin;
    j["rlmax"] = p.rlmax;
    j["rlmin"] = p.rlmin;
    return j;
}

std::string motzkin_letters(const std::vector<MotzkinStep>& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        switch (w[i]) {
            case MotzkinStep::Up: out += 'u'; break;
            case MotzkinStep::LevelStar: out += "l*"; break;
            case MotzkinStep::LevelSub: out += "l_"; break;
            case MotzkinStep::Down: out += 'd'; break;
        }
    }
    return out;
}

struct CommonMatchingArgs {
    int n = 0;
    std::string tops, bottoms;

    DescentMatching matching() const {
        return make_matching(parse_int_list(tops), parse_int_list(bottoms));
    }
};

void add_matching_options(CLI::App* cmd, CommonMatchingArgs& args) {
    cmd->add_option("--n", args.n, "ambient permutation length")->required();
    cmd->add_option("--tops", args.tops, "descent tops, comma-separated (may be empty)");
    cmd->add_option("--bottoms", args.bottoms, "descent bottoms, comma-separated (may be empty)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"descent-statistic toolkit for pattern-avoiding permutations"};
    app.require_subcommand(1);

    // stats
    std::string stats_perm;
    auto* stats = app.add_subcommand("stats", "all statistic sets of a permutation");
    stats->add_option("perm", stats_perm, "one-line permutation text");

    // realize
    CommonMatchingArgs realize_args;
    std::string realize_target = "312";
    auto* realize = app.add_subcommand("realize", "realize a descent matching");
    add_matching_options(realize, realize_args);
    realize->add_option("--target", realize_target, "which realization to build")
        ->check(CLI::IsMember({"312", "231", "canonical"}));

    // dist-poly
    CommonMatchingArgs poly_args;
    bool check_brute = false;
    auto* poly = app.add_subcommand("dist-poly", "joint (2-31, 31-2) distribution polynomial");
    add_matching_options(poly, poly_args);
    poly->add_flag("--check-brute", check_brute, "also enumerate the fiber and compare");

    // laguerre encode/decode
    auto* laguerre = app.add_subcommand("laguerre", "restricted Laguerre history codec");
    laguerre->require_subcommand(1);
    std::string encode_perm;
    auto* encode = laguerre->add_subcommand("encode", "permutation -> (w, h, c)");
    encode->add_option("perm", encode_perm, "one-line permutation text");
    CommonMatchingArgs decode_args;
    std::string decode_labels;
    auto* decode = laguerre->add_subcommand("decode", "(n, T, B, c) -> permutation");
    add_matching_options(decode, decode_args);
    decode->add_option("--labels", decode_labels, "labels c_1..c_n, comma-separated")->required();

    // verify
    std::string claim_id;
    VerifyParams vp;
    std::string verify_format = "json";
    auto* verify_cmd = app.add_subcommand("verify", "run a registered verification campaign");
    verify_cmd->add_option("claim", claim_id, "claim identifier")->required();
    verify_cmd->add_option("--max-n", vp.max_n, "largest permutation length swept");
    verify_cmd->add_option("--max-k", vp.max_k, "largest board height (0 = claim default)");
    verify_cmd->add_option("--jobs", vp.jobs, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--trials", vp.trials, "random evaluation points per matching");
    verify_cmd->add_option("--seed", vp.seed, "seed for random evaluation");
    verify_cmd->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*stats) {
            const Permutation sigma = parse_permutation(stats_perm);
            emit(envelope("stats", {{"perm", stats_perm}}, profile_json(sigma)));
            return 0;
        }
        if (*realize) {
            const DescentMatching m = realize_args.matching();
            Permutation out;
            if (realize_target == "312") out = realize_312(m, realize_args.n);
            else if (realize_target == "231") out = realize_231(m, realize_args.n);
            else out = realize_canonical(m, realize_args.n);
            emit(envelope("realize",
                          {{"n", realize_args.n},
                           {"tops", realize_args.tops},
                           {"bottoms", realize_args.bottoms},
                           {"target", realize_target}},
                          {{"perm", format_permutation(out)}}));
            return 0;
        }
        if (*poly) {
            const DescentMatching m = poly_args.matching();
            const DistPolynomial rhs = rhs_product(poly_args.n, m);
            ordered_json result;
            result["polynomial"] = rhs.to_string();
            if (check_brute) {
                const DistPolynomial lhs = lhs_brute(poly_args.n, m, kBruteBound);
                result["brute_polynomial"] = lhs.to_string();
                result["equal"] = (lhs == rhs);
            }
            emit(envelope("dist-poly",
                          {{"n", poly_args.n},
                           {"tops", poly_args.tops},
                           {"bottoms", poly_args.bottoms},
                           {"check_brute", check_brute}},
                          result));
            return 0;
        }
        if (*encode) {
            const Permutation sigma = parse_permutation(encode_perm);
            const auto [m, labels] = fv_encode(sigma);
            const LaguerreHistory hist = make_history(sigma.size(), m, labels);
            ordered_json result;
            result["tops"] = m.tops;
            result["bottoms"] = m.bottoms;
            result["w"] = motzkin_letters(hist.w);
            result["h"] = hist.h;
            result["c"] = hist.c;
            result["history"] = format_history(hist);
            emit(envelope("laguerre encode", {{"perm", encode_perm}}, result));
            return 0;
        }
        if (*decode) {
            const DescentMatching m = decode_args.matching();
            const std::vector<int> labels = parse_int_list(decode_labels);
            const Permutation sigma = fv_decode(decode_args.n, m, labels);
            emit(envelope("laguerre decode",
                          {{"n", decode_args.n},
                           {"tops", decode_args.tops},
                           {"bottoms", decode_args.bottoms},
                           {"labels", decode_labels}},
                          {{"perm", format_permutation(sigma)}}));
            return 0;
        }
        if (*verify_cmd) {
            VerificationReport rep;
            try {
                rep = verify(claim_id, vp);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\nregistered claims:\n";
                for (const std::string& id : registered_claims()) std::cerr << "  " << id << "\n";
                return 2;
            }
            if (verify_format == "table") {
                std::cout << "claim:    " << rep.claim_id << "\n"
                          << "params:   " << rep.params.dump() << "\n"
                          << "verdict:  " << rep.to_json()["verdict"].get<std::string>() << "\n";
                if (rep.witness) std::cout << "witness:  " << rep.witness->dump() << "\n";
                std::cout << "elapsed:  " << rep.elapsed_ms << " ms\n"
                          << "counts:   " << rep.counts_summary.dump() << "\n";
            } else {
                emit(envelope("verify",
                              {{"claim", claim_id}, {"format", verify_format}},
                              rep.to_json()));
            }
            return rep.verdict == Verdict::Counterexample ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
