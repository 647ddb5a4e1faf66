#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "mfkit/catalog.hpp"
#include "mfkit/json_io.hpp"

namespace {

using nlohmann::json;

// Command-line level mistakes (bad option values, unknown names); exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep)) {
        // trim surrounding whitespace
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        out.push_back(begin == std::string::npos ? "" : item.substr(begin, end - begin + 1));
    }
    return out;
}

json load_json(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path);
        if (!file) throw std::runtime_error("cannot open file: " + path);
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return json::parse(text);
}

mfkit::Factorization load_factorization(const std::string& path,
                                        std::vector<std::string>& variables) {
    return mfkit::factorization_from_json(load_json(path), &variables);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int det_cap_from_env() {
    const char* raw = std::getenv("MFKIT_DET_CAP");
    if (!raw) return mfkit::kDefaultDetCap;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1)
        throw UsageError("MFKIT_DET_CAP must be a positive integer");
    return static_cast<int>(value);
}

std::vector<std::string> parse_vars_option(const std::string& vars_text) {
    std::vector<std::string> vars = split(vars_text, ',');
    if (vars.empty()) throw UsageError("--vars: expected a comma-separated name list");
    return vars;
}

mfkit::TermList parse_terms_option(const std::string& terms_text,
                                   std::span<const std::string> vars) {
    mfkit::TermList terms;
    for (const std::string& tok : split(terms_text, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw UsageError("--terms: each entry must look like g:h, got '" + tok + "'");
        try {
            terms.pairs.emplace_back(
                mfkit::Polynomial::parse(tok.substr(0, colon), vars),
                mfkit::Polynomial::parse(tok.substr(colon + 1), vars));
        } catch (const mfkit::ParseError& e) {
            throw UsageError("--terms: bad polynomial in '" + tok + "': " + e.what());
        }
    }
    if (terms.pairs.empty()) throw UsageError("--terms: expected at least one g:h pair");
    return terms;
}

std::string variant_name(mfkit::Thm32Variant v) {
    return v == mfkit::Thm32Variant::A ? "A" : "B";
}

int run(int argc, char** argv) {
    CLI::App app{"mfkit: exact matrix factorizations of multivariate polynomials"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit reports as JSON instead of text");

    std::string vars_text, terms_text;
    CLI::App* factor = app.add_subcommand(
        "factor", "build a pair for sum(g_i*h_i) with the standard method");
    factor->add_option("--vars", vars_text, "comma-separated variable names")->required();
    factor->add_option("--terms", terms_text, "comma-separated g:h polynomial pairs")->required();

    std::string in_path = "-";
    CLI::App* verify = app.add_subcommand("verify", "check a factorization file (or stdin)");
    verify->add_option("--file", in_path, "factorization JSON, '-' for stdin");
    verify->add_flag("--json", as_json, "emit the report as JSON");

    int shift = 0;
    CLI::App* rotate = app.add_subcommand("rotate", "emit cyclic rearrangements of the tuple");
    rotate->add_option("--file", in_path, "factorization JSON, '-' for stdin");
    rotate->add_option("--shift", shift, "emit only the rotation starting at factor i (1-based)");

    CLI::App* reverse = app.add_subcommand("reverse", "emit the reversed-transpose tuple");
    reverse->add_option("--file", in_path, "factorization JSON, '-' for stdin");

    CLI::App* blockgen =
        app.add_subcommand("blockgen", "derive the 14 block rearrangements of a pair");
    blockgen->add_option("--file", in_path, "factorization JSON, '-' for stdin");

    bool irreducible = false;
    CLI::App* certify = app.add_subcommand("certify", "per-factor determinant certificates");
    certify->add_option("--file", in_path, "factorization JSON, '-' for stdin");
    certify->add_flag("--irreducible", irreducible,
                      "also decompose each determinant as unit * target^k");
    certify->add_flag("--json", as_json, "emit the report as JSON");

    mfkit::OrbitOptions orbit_options;
    bool emit_members = false;
    CLI::App* orbit = app.add_subcommand(
        "orbit", "count the closure under rotation, reversal and block generation");
    orbit->add_option("--file", in_path, "factorization JSON, '-' for stdin");
    orbit->add_option("--depth-cap", orbit_options.depth_cap, "maximum expansion depth");
    orbit->add_option("--set-cap", orbit_options.set_cap, "maximum member count");
    orbit->add_flag("--emit", emit_members, "include the members in JSON output");
    orbit->add_flag("--json", as_json, "emit the report as JSON");

    std::string name;
    bool list = false;
    CLI::App* catalog = app.add_subcommand("catalog", "dump a built-in factorization");
    catalog->add_option("--name", name, "entry name (see --list)");
    catalog->add_flag("--list", list, "list the available entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*factor) {
        std::vector<std::string> vars = parse_vars_option(vars_text);
        mfkit::Factorization fac = mfkit::standard_method(parse_terms_option(terms_text, vars));
        emit(mfkit::factorization_to_json(fac, vars));
        return 0;
    }

    if (*verify) {
        std::vector<std::string> vars;
        mfkit::Factorization fac = load_factorization(in_path, vars);
        fac.verify();
        if (as_json) {
            emit(json{{"ok", true},
                      {"target", fac.target().to_string(vars)},
                      {"factors", fac.factor_count()},
                      {"size", fac.size()}});
        } else {
            std::cout << "ok: " << fac.factor_count() << " factors of size " << fac.size()
                      << " multiply to (" << fac.target().to_string(vars) << ") * I\n";
        }
        return 0;
    }

    if (*rotate) {
        std::vector<std::string> vars;
        mfkit::Factorization fac = load_factorization(in_path, vars);
        fac.verify();
        std::vector<mfkit::Factorization> rotations = mfkit::cyclic_rotations(fac);
        if (shift != 0) {
            if (shift < 1 || shift > fac.factor_count())
                throw UsageError("--shift must lie in 1.." + std::to_string(fac.factor_count()));
            emit(mfkit::factorization_to_json(rotations[static_cast<std::size_t>(shift - 1)], vars));
        } else {
            json all = json::array();
            for (const mfkit::Factorization& rot : rotations)
                all.push_back(mfkit::factorization_to_json(rot, vars));
            emit(all);
        }
        return 0;
    }

    if (*reverse) {
        std::vector<std::string> vars;
        mfkit::Factorization fac = load_factorization(in_path, vars);
        fac.verify();
        emit(mfkit::factorization_to_json(mfkit::transpose_reversal(fac), vars));
        return 0;
    }

    if (*blockgen) {
        std::vector<std::string> vars;
        mfkit::Factorization fac = load_factorization(in_path, vars);
        fac.verify();
        if (fac.factor_count() != 2)
            throw std::runtime_error("blockgen needs a 2-factor factorization");
        if (fac.size() % 2 != 0)
            throw std::runtime_error("blockgen needs an even matrix size");
        mfkit::BlockQuad qa = mfkit::partition(fac.factors()[0]);
        mfkit::BlockQuad qb = mfkit::partition(fac.factors()[1]);
        mfkit::Thm32HypothesisResult hyp = mfkit::thm32_hypothesis(qa, qb);
        if (!hyp.match)
            throw std::runtime_error("block hypothesis not satisfied: " + hyp.failure);
        std::vector<mfkit::Factorization> items = mfkit::thm32_generate(qa, qb);
        std::unordered_set<std::string> keys;
        for (const mfkit::Factorization& item : items) keys.insert(mfkit::canonical_key(item));
        json out{{"variant", variant_name(hyp.match->variant)},
                 {"pattern", hyp.match->pattern},
                 {"distinct", keys.size()},
                 {"items", json::array()}};
        for (const mfkit::Factorization& item : items)
            out["items"].push_back(mfkit::factorization_to_json(item, vars));
        emit(out);
        return 0;
    }

    if (*certify) {
        std::vector<std::string> vars;
        mfkit::Factorization fac = load_factorization(in_path, vars);
        fac.verify();
        mfkit::DetCertificate cert =
            mfkit::det_certificate(fac, irreducible, det_cap_from_env());
        if (as_json) {
            json out{{"target", fac.target().to_string(vars)},
                     {"target_power", cert.target_power.to_string(vars)},
                     {"factors", json::array()}};
            for (const mfkit::FactorCertificate& c : cert.factors) {
                json entry{{"determinant", c.determinant.to_string(vars)},
                           {"quotient", c.quotient.to_string(vars)}};
                if (c.power) {
                    entry["power"] = *c.power;
                    entry["unit"] = c.unit->get_str();
                }
                out["factors"].push_back(std::move(entry));
            }
            emit(out);
        } else {
            std::cout << "target^m = " << cert.target_power.to_string(vars) << "\n";
            for (std::size_t i = 0; i < cert.factors.size(); ++i) {
                const mfkit::FactorCertificate& c = cert.factors[i];
                std::cout << "factor " << (i + 1) << ": det = " << c.determinant.to_string(vars)
                          << "; target^m / det = " << c.quotient.to_string(vars);
                if (c.power)
                    std::cout << "; det = " << c.unit->get_str() << " * target^" << *c.power;
                std::cout << "\n";
            }
            std::cout << "product of determinants = target^m: ok\n";
        }
        return 0;
    }

    if (*orbit) {
        std::vector<std::string> vars;
        mfkit::Factorization fac = load_factorization(in_path, vars);
        fac.verify();
        mfkit::OrbitResult result = mfkit::orbit(fac, orbit_options);
        if (as_json) {
            json out{{"count", result.members.size()}, {"complete", result.complete}};
            if (emit_members) {
                out["members"] = json::array();
                for (const mfkit::Factorization& member : result.members)
                    out["members"].push_back(mfkit::factorization_to_json(member, vars));
            }
            emit(out);
        } else {
            std::cout << "orbit count: " << result.members.size()
                      << (result.complete ? " (fixpoint reached)" : " (cap hit; lower bound)")
                      << "\n";
        }
        return 0;
    }

    if (*catalog) {
        if (list) {
            for (const mfkit::CatalogEntry& entry : mfkit::catalog()) {
                std::cout << entry.name << ": " << entry.factorization.factor_count()
                          << " factors of size " << entry.factorization.size() << ", target "
                          << entry.target.to_string(entry.variables) << " (" << entry.provenance
                          << ")\n";
            }
            return 0;
        }
        if (name.empty()) throw UsageError("catalog: pass --name NAME or --list");
        const mfkit::CatalogEntry* entry = mfkit::catalog_find(name);
        if (!entry) throw UsageError("catalog: unknown entry '" + name + "' (try --list)");
        emit(mfkit::factorization_to_json(entry->factorization, entry->variables));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const mfkit::VerifyError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
