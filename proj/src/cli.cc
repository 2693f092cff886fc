// Copyright 2026 The NWE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nwe/cli.h"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nwe/constructions.h"
#include "nwe/document.h"
#include "nwe/lemma_engine.h"
#include "nwe/oplm_verifier.h"

namespace nwe::cli {

using nlohmann::json;

namespace {

struct SetSource {
    std::string input;
    std::vector<std::size_t> dims;
    bool equal = false;
    std::size_t parties = 0;
    std::size_t dim = 0;
};

void add_set_options(CLI::App &cmd, SetSource &src, bool allow_input) {
    if (allow_input) {
        cmd.add_option("--input", src.input, "Read the state set from an nwe/1 JSON document");
    }
    cmd.add_option("--dims", src.dims, "Dimension vector for the general family, e.g. 3,3,4")->delimiter(',');
    cmd.add_flag("--equal", src.equal, "Use the equal-dimension family");
    cmd.add_option("--parties", src.parties, "Party count n for --equal");
    cmd.add_option("--dim", src.dim, "Local dimension d for --equal");
}

// Throws ConstructionDomainError / CLI::ValidationError for bad parameters, InputError for bad files.
StateSet load_set(const SetSource &src) {
    const int chosen = int(!src.input.empty()) + int(!src.dims.empty()) + int(src.equal);
    if (chosen != 1) {
        throw CLI::ValidationError("exactly one of --input, --dims, --equal is required");
    }
    if (!src.input.empty()) {
        std::ifstream in(src.input, std::ios::binary);
        if (!in) {
            throw InputError("cannot open input file " + src.input);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_document(buf.str());
    }
    if (src.equal) {
        return gen_equal(src.parties, src.dim);
    }
    return gen_general(src.dims);
}

bool write_text(const std::string &path, const std::string &text, std::ostream &out, std::ostream &err) {
    if (path.empty()) {
        out << text;
        return true;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

int cmd_generate(const SetSource &src, const std::string &out_path, std::ostream &out, std::ostream &err) {
    if (!src.input.empty()) {
        throw CLI::ValidationError("generate takes --dims or --equal, not --input");
    }
    const auto set = load_set(src);
    if (!write_text(out_path, canonical_dump(to_document(set)), out, err)) {
        return kIoError;
    }
    (out_path.empty() ? err : out) << set.size() << " states " << set.provenance()
                                   << (out_path.empty() ? "" : " -> " + out_path) << "\n";
    return kCertified;
}

std::string text_report(const StateSet &set, const json &report, const Certificate *cert) {
    std::ostringstream ss;
    ss << "set: " << set.provenance() << ", " << set.size() << " states over " << set.shape().str() << "\n";
    ss << "orthogonality: " << (report["orthogonality"]["ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
    for (const auto &entry : report["per_party"]) {
        ss << "party " << entry["party"].get<std::size_t>() << " [" << entry["engine"].get<std::string>()
           << "]: " << entry["status"].get<std::string>();
        if (entry.contains("nullspace_dim")) {
            ss << " (nullspace dim " << entry["nullspace_dim"].get<std::size_t>() << ")";
        }
        ss << "\n";
    }
    if (cert != nullptr) {
        ss << "certificate:\n" << render_certificate(*cert);
    }
    ss << "summary: " << report["summary"].get<std::string>() << "\n";
    return ss.str();
}

int cmd_verify(const SetSource &src, const std::string &engine, const std::string &format, const std::string &out_path,
               std::ostream &out, std::ostream &err) {
    const auto set = load_set(src);
    const bool run_lemma = engine == "lemma" || engine == "both";
    const bool run_oracle = engine == "oracle" || engine == "both";

    json report;
    report["states"] = set.size();
    report["provenance"] = set.provenance();
    report["sizes"] = to_json(prior_sizes(set.shape().dims()));
    report["per_party"] = json::array();

    const auto violations = check_pairwise_orthogonality(set);
    json pairs = json::array();
    for (const auto &[i, j] : violations) {
        pairs.push_back({i, j});
    }
    report["orthogonality"] = {{"ok", violations.empty()}, {"violations", pairs}};
    if (!violations.empty()) {
        report["summary"] = "input set is not pairwise orthogonal";
        report["certified"] = false;
        err << ValidationError(violations).what() << "\n";
        write_text(out_path, format == "text" ? text_report(set, report, nullptr) : canonical_dump(report), out, err);
        return kInvalidInput;
    }

    std::optional<Certificate> cert;
    std::vector<TrivialityVerdict> verdicts;
    if (run_lemma) {
        cert = derive_certificate(set);
    }
    if (run_oracle) {
        verdicts = verify_all(set);
    }
    for (std::size_t t = 0; t < set.shape().parties(); t++) {
        if (cert) {
            report["per_party"].push_back(to_json(*cert, t));
        }
        if (run_oracle) {
            report["per_party"].push_back(to_json(verdicts[t]));
        }
    }

    int code = kCertified;
    std::string summary;
    if (run_oracle) {
        if (certified_nonlocal(verdicts)) {
            summary = cert && !cert->all_trivial() ? "certified (oracle); lemma-engine incomplete"
                                                   : "certified: every orthogonality-preserving local measurement "
                                                     "is trivial on every party";
        } else {
            code = kNontrivial;
            std::string parties;
            for (const auto &v : verdicts) {
                if (!v.trivial()) {
                    parties += (parties.empty() ? "" : ",") + std::to_string(v.party);
                }
            }
            summary = "not certified: a nontrivial orthogonality-preserving measurement exists on parties [" +
                      parties + "] (this alone does not show the set is LOCC distinguishable)";
        }
    } else {
        if (cert->all_trivial()) {
            summary = "certified (lemma engine): every party's measurement is forced to be trivial";
        } else {
            code = kNontrivial;
            summary = "lemma engine incomplete; run the oracle for a decision";
        }
    }
    report["summary"] = summary;
    report["certified"] = code == kCertified;

    const std::string text =
        format == "text" ? text_report(set, report, cert ? &*cert : nullptr) : canonical_dump(report);
    if (!write_text(out_path, text, out, err)) {
        return kIoError;
    }
    return code;
}

std::string opt_str(const std::optional<std::int64_t> &v) {
    return v ? std::to_string(*v) : "-";
}

int cmd_compare(const std::vector<std::size_t> &dims, bool as_json, std::ostream &out) {
    const auto report = prior_sizes(dims);
    if (as_json) {
        out << canonical_dump(to_json(report));
        return kCertified;
    }
    std::string shape = "(";
    for (std::size_t k = 0; k < dims.size(); k++) {
        shape += (k ? "," : "") + std::to_string(dims[k]);
    }
    shape += ")";
    out << "set sizes for " << shape << "\n";
    out << std::left << std::setw(8) << "ours" << opt_str(report.ours) << "  [1]\n";
    out << std::left << std::setw(8) << "jiang" << report.jiang << "  [2]\n";
    out << std::left << std::setw(8) << "wang" << opt_str(report.wang) << "  [3]\n";
    out << std::left << std::setw(8) << "zhang" << opt_str(report.zhang) << "  [4]\n";
    out << "[1] sum_{i=2}^{n-1} d_i + 2 d_n - n + 1; needs n >= 3 and 3 <= d_1 <= ... <= d_n "
           "(equals n(d-1)+1 when all d_i = d)\n";
    out << "[2] sum_i (2 d_i - 3) + 1 (8d-11 for four parties of dimension d)\n";
    out << "[3] 2(d_1 + d_3) - 3, tripartite systems only\n";
    out << "[4] 2 d_n - 1, bipartite systems only\n";
    return kCertified;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Generate and certify locally indistinguishable orthogonal product state sets", "nwe"};
    app.require_subcommand(1);

    SetSource gen_src;
    std::string gen_out;
    auto *generate = app.add_subcommand("generate", "Write a construction as an nwe/1 JSON document");
    add_set_options(*generate, gen_src, false);
    generate->add_option("--out", gen_out, "Output path (default: stdout)");

    SetSource ver_src;
    std::string engine = "both";
    std::string format = "json";
    std::string ver_out;
    auto *verify = app.add_subcommand("verify", "Check orthogonality and certify measurement triviality");
    add_set_options(*verify, ver_src, true);
    verify->add_option("--engine", engine, "lemma, oracle or both")
        ->check(CLI::IsMember({"lemma", "oracle", "both"}));
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", ver_out, "Report path (default: stdout)");

    std::vector<std::size_t> cmp_dims;
    bool cmp_json = false;
    auto *compare = app.add_subcommand("compare", "Compare set sizes with earlier constructions");
    compare->add_option("--dims", cmp_dims, "Dimension vector, e.g. 3,3,3")->delimiter(',')->required();
    compare->add_flag("--json", cmp_json, "Emit JSON instead of a table");

    std::vector<std::string> argv_storage{"nwe"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kParameterError;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(gen_src, gen_out, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(ver_src, engine, format, ver_out, out, err);
        }
        return cmd_compare(cmp_dims, cmp_json, out);
    } catch (const ConstructionDomainError &e) {
        err << "parameter error: " << e.what() << "\n";
        return kParameterError;
    } catch (const CLI::ValidationError &e) {
        err << "parameter error: " << e.what() << "\n";
        return kParameterError;
    } catch (const DimensionError &e) {
        err << "parameter error: " << e.what() << "\n";
        return kParameterError;
    } catch (const InputError &e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const ValidationError &e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    }
}

}  // namespace nwe::cli
