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

#include "nwe/document.h"

#include <algorithm>
#include <limits>

namespace nwe {

using nlohmann::json;

namespace {

const json &require_key(const json &obj, const char *key, const std::string &where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InputError(where + ": missing key \"" + key + "\"");
    }
    return obj.at(key);
}

std::int64_t require_int(const json &v, const std::string &where) {
    if (!v.is_number_integer()) {
        throw InputError(where + ": expected an integer, got " + v.dump());
    }
    return v.get<std::int64_t>();
}

}  // namespace

json to_document(const StateSet &set) {
    json states = json::array();
    for (const auto &s : set.states()) {
        json locals = json::array();
        for (const auto &v : s.locals()) {
            locals.push_back(std::vector<std::int64_t>(v.coeffs().begin(), v.coeffs().end()));
        }
        states.push_back({{"label", s.label()}, {"locals", std::move(locals)}});
    }
    return {
        {"dims", set.shape().dims()},
        {"provenance", set.provenance()},
        {"states", std::move(states)},
        {"version", kFormatVersion},
    };
}

StateSet from_document(const json &doc) {
    if (!doc.is_object()) {
        throw InputError("document: expected a JSON object");
    }
    const auto &version = require_key(doc, "version", "document");
    if (version != kFormatVersion) {
        throw InputError("document: unsupported version " + version.dump() + ", expected \"nwe/1\"");
    }
    const auto &dims_json = require_key(doc, "dims", "document");
    if (!dims_json.is_array()) {
        throw InputError("document: \"dims\" must be an array");
    }
    std::vector<std::size_t> dims;
    for (const auto &d : dims_json) {
        const auto value = require_int(d, "dims");
        if (value < 0) {
            throw InputError("dims: negative dimension " + std::to_string(value));
        }
        dims.push_back(static_cast<std::size_t>(value));
    }
    std::string provenance = "user";
    if (doc.contains("provenance")) {
        if (!doc["provenance"].is_string()) {
            throw InputError("document: \"provenance\" must be a string");
        }
        provenance = doc["provenance"].get<std::string>();
    }
    const auto &states_json = require_key(doc, "states", "document");
    if (!states_json.is_array()) {
        throw InputError("document: \"states\" must be an array");
    }
    try {
        SystemShape shape(dims);
        std::vector<ProductState> states;
        for (std::size_t i = 0; i < states_json.size(); i++) {
            const std::string where = "states[" + std::to_string(i) + "]";
            const auto &entry = states_json[i];
            std::string label;
            if (entry.is_object() && entry.contains("label")) {
                if (!entry["label"].is_string()) {
                    throw InputError(where + ": \"label\" must be a string");
                }
                label = entry["label"].get<std::string>();
            }
            const auto &locals_json = require_key(entry, "locals", where);
            if (!locals_json.is_array() || locals_json.size() != dims.size()) {
                throw InputError(where + ": \"locals\" must be an array of " + std::to_string(dims.size()) +
                                 " vectors");
            }
            std::vector<LocalVector> locals;
            for (std::size_t k = 0; k < locals_json.size(); k++) {
                const std::string at = where + ".locals[" + std::to_string(k) + "]";
                const auto &vec = locals_json[k];
                if (!vec.is_array() || vec.size() != dims[k]) {
                    throw InputError(at + ": expected " + std::to_string(dims[k]) + " coefficients");
                }
                std::vector<std::int64_t> coeffs;
                for (const auto &c : vec) {
                    coeffs.push_back(require_int(c, at));
                }
                try {
                    locals.emplace_back(std::move(coeffs));
                } catch (const DimensionError &e) {
                    throw InputError(at + ": " + e.what());
                }
            }
            states.emplace_back(shape, std::move(locals), std::move(label));
        }
        return StateSet(std::move(shape), std::move(states), std::move(provenance));
    } catch (const DimensionError &e) {
        throw InputError(std::string("document: ") + e.what());
    }
}

StateSet parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t k = 0; k < upto; k++) {
            if (text[k] == '\n') {
                line++;
                column = 1;
            } else {
                column++;
            }
        }
        throw InputError("JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what());
    }
    return from_document(doc);
}

std::string canonical_dump(const json &value) {
    return value.dump(2) + "\n";
}

json to_json(const SizeReport &report) {
    json out = {{"dims", report.dims}, {"jiang", report.jiang}};
    if (report.ours) {
        out["ours"] = *report.ours;
    }
    if (report.wang) {
        out["wang"] = *report.wang;
    }
    if (report.zhang) {
        out["zhang"] = *report.zhang;
    }
    return out;
}

json to_json(const Certificate &cert, std::size_t party) {
    const auto &conclusion = cert.conclusions.at(party);
    json facts = json::array();
    for (const auto &f : cert.facts_for(party)) {
        facts.push_back(render_fact(f, cert.labels));
    }
    json out = {
        {"party", party},
        {"engine", "lemma"},
        {"status", conclusion.trivial ? "Trivial" : "Incomplete"},
        {"facts", std::move(facts)},
    };
    if (!conclusion.trivial) {
        json missing = json::array();
        for (const auto &[a, b] : conclusion.missing_zeros) {
            missing.push_back({a, b});
        }
        out["missing_zeros"] = std::move(missing);
        out["diagonal_classes"] = conclusion.diagonal_classes;
    }
    return out;
}

json to_json(const HermitianMatrix &matrix) {
    json re = json::array();
    json im = json::array();
    for (const auto &row : matrix) {
        json re_row = json::array();
        json im_row = json::array();
        for (const auto &x : row) {
            re_row.push_back(rational_str(x.re));
            im_row.push_back(rational_str(x.im));
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const TrivialityVerdict &verdict) {
    json out = {
        {"party", verdict.party},
        {"engine", "oracle"},
        {"status", verdict.trivial() ? "Trivial" : "Nontrivial"},
        {"nullspace_dim", verdict.nullspace_dim},
    };
    if (verdict.witness) {
        out["witness"] = to_json(*verdict.witness);
    }
    return out;
}

}  // namespace nwe
