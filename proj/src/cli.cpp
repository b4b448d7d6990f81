#include "ydk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ydk/brauer.hpp"
#include "ydk/characters.hpp"
#include "ydk/littlewood_richardson.hpp"
#include "ydk/modification.hpp"
#include "ydk/stable_product.hpp"

namespace ydk::cli {

namespace {

using nlohmann::json;

struct Request {
    std::string op;
    std::optional<Family> family;
    std::optional<int> n;
    std::vector<Partition> operands;
    std::optional<int> level;
    bool stable = false;
    bool trace = false;
    std::optional<json> claimed_terms;
};

struct Outcome {
    json record;
    std::string text;
    bool mismatch = false;  // a verification ran and disagreed
};

class BadRequest : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json big_to_json(const BigInt& value) {
    if (value <= std::numeric_limits<std::int64_t>::max() && value >= std::numeric_limits<std::int64_t>::min())
        return static_cast<std::int64_t>(value);
    return value.str();
}

json rows_json(const Partition& p) { return p.rows(); }

json terms_json(const Decomposition& d) {
    json terms = json::array();
    for (const auto& [label, mult] : d) terms.push_back({{"shape", rows_json(label)}, {"mult", mult}});
    return terms;
}

json terms_json(const WeightDecomposition& d) {
    json terms = json::array();
    for (const auto& [label, mult] : d) terms.push_back({{"shape", label.entries}, {"mult", mult}});
    return terms;
}

json inputs_json(const Request& r) {
    json inputs = json::object();
    if (r.family) inputs["family"] = std::string(family_name(*r.family));
    if (r.n) inputs["n"] = *r.n;
    json operands = json::array();
    for (const Partition& p : r.operands) operands.push_back(rows_json(p));
    inputs["operands"] = operands;
    if (r.level) inputs["level"] = *r.level;
    if (r.stable) inputs["stable"] = true;
    return inputs;
}

GroupContext require_group(const Request& r) {
    if (!r.family || !r.n) throw BadRequest(r.op + " needs --family and --n");
    return GroupContext(*r.family, *r.n);
}

void require_operands(const Request& r, std::size_t low, std::size_t high) {
    if (r.operands.size() < low || r.operands.size() > high)
        throw BadRequest(r.op + " takes " +
                         (low == high ? std::to_string(low) : std::to_string(low) + " to " + std::to_string(high)) +
                         " partition operands");
}

std::string trace_text(const std::vector<StandardizationTrace>& traces) {
    std::ostringstream os;
    for (const auto& t : traces) {
        os << "trace: " << t.label.to_string();
        if (t.multiplicity != 1) os << " (x" << t.multiplicity << ")";
        os << "\n";
        for (const auto& step : t.steps) {
            os << "  " << step.label.to_string() << ": " << step.rows << " rows, hook length " << step.hook_length;
            if (!step.strip) {
                os << (step.hook_length <= 0 ? ", non-positive length" : ", strip not removable") << " -> 0\n";
                continue;
            }
            os << ", strip";
            for (const Cell& c : step.strip->boxes) os << " (" << c.row << "," << c.col << ")";
            os << ", columns spanned " << step.strip->columns_spanned << ", sign " << (step.sign > 0 ? "+1" : "-1") << " -> "
               << step.strip->inner.to_string() << "\n";
        }
        os << "  result: " << t.result.to_string() << "\n";
    }
    return os.str();
}

json trace_json(const std::vector<StandardizationTrace>& traces) {
    json out = json::array();
    for (const auto& t : traces) {
        json steps = json::array();
        for (const auto& step : t.steps) {
            json s = {{"label", rows_json(step.label)}, {"rows", step.rows}, {"hook_length", step.hook_length}};
            if (step.strip) {
                json cells = json::array();
                for (const Cell& c : step.strip->boxes) cells.push_back({c.row, c.col});
                s["strip"] = cells;
                s["columns_spanned"] = step.strip->columns_spanned;
                s["sign"] = step.sign;
            } else {
                s["strip"] = nullptr;
            }
            steps.push_back(std::move(s));
        }
        out.push_back({{"label", rows_json(t.label)},
                       {"mult", t.multiplicity},
                       {"steps", steps},
                       {"result", {{"shape", rows_json(t.result.shape)}, {"sign", t.result.sign}}}});
    }
    return out;
}

std::string product_header(const Request& r) {
    return r.operands.at(0).to_string() + " x " + r.operands.at(1).to_string();
}

/// Independent check of a stable product: characters of SO(2L+1) with L large enough
/// that no label needs modification. std::nullopt when that group is above the cap.
std::optional<bool> certify_stable(const Partition& a, const Partition& b, const Decomposition& stable) {
    const OracleLimits limits = OracleLimits::from_environment();
    const int rank = std::max(1, a.length() + b.length());
    if (rank > limits.max_rank || a.size() > limits.max_boxes || b.size() > limits.max_boxes) return std::nullopt;
    return verify_product(a, b, GroupContext(Family::SO, 2 * rank + 1), stable, limits).passed;
}

Outcome evaluate_lr(const Request& r) {
    require_operands(r, 2, 3);
    Outcome o;
    const Partition& a = r.operands[0];
    const Partition& b = r.operands[1];
    if (r.operands.size() == 3) {
        const Partition& nu = r.operands[2];
        const std::int64_t c = lr_coefficient(a, b, nu);
        const bool symmetric = c == lr_coefficient(b, a, nu);
        Decomposition d;
        d.add(nu, c);
        o.record = {{"terms", terms_json(d)}, {"certified", symmetric}};
        o.text = "c(" + a.to_string() + ", " + b.to_string() + "; " + nu.to_string() + ") = " + std::to_string(c) + "\n";
        return o;
    }
    const Decomposition product = lr_product(a, b);
    BigInt weighted = 0;
    for (const auto& [nu, mult] : product) weighted += sym_dim(nu) * mult;
    const bool certified = weighted == sym_dim(a) * sym_dim(b) * binomial(a.size() + b.size(), a.size());
    o.record = {{"terms", terms_json(product)}, {"certified", certified}};
    o.text = product_header(r) + " = " + product.to_string() + "\n";
    return o;
}

Outcome evaluate_stable(const Request& r) {
    require_operands(r, 2, 2);
    Outcome o;
    const Decomposition stable = stable_kronecker(r.operands[0], r.operands[1]);
    const std::optional<bool> certified = certify_stable(r.operands[0], r.operands[1], stable);
    o.record = {{"terms", terms_json(stable)}, {"certified", certified.value_or(false)}};
    o.mismatch = certified.has_value() && !*certified;
    if (!certified) o.record["detail"] = "beyond the character oracle caps";
    o.text = product_header(r) + " = " + stable.to_string() + "  (stable)\n";
    return o;
}

Outcome evaluate_decompose(const Request& r) {
    require_operands(r, 2, 2);
    if (r.stable) {
        Outcome o = evaluate_stable(r);
        return o;
    }
    const GroupContext ctx = require_group(r);
    const Partition& a = r.operands[0];
    const Partition& b = r.operands[1];
    std::vector<StandardizationTrace> traces;
    const Decomposition result = kronecker(a, b, ctx, r.trace ? &traces : nullptr);

    Outcome o;
    bool certified = false;
    std::string note;
    try {
        certified = verify_product(a, b, ctx, result).passed;
        o.mismatch = !certified;
    } catch (const OracleCapExceeded& e) {
        note = e.what();
    }
    json terms;
    std::string rendered;
    if (ctx.family() == Family::SO && ctx.even_orthogonal()) {
        const WeightDecomposition split = to_weights(result, ctx);
        terms = terms_json(split);
        rendered = split.to_string();
    } else {
        terms = terms_json(result);
        rendered = result.to_string();
    }
    o.record = {{"terms", terms}, {"certified", certified}};
    if (!note.empty()) o.record["detail"] = note;
    if (r.trace) o.record["trace"] = trace_json(traces);
    o.text = r.trace ? trace_text(traces) : "";
    o.text += product_header(r) + " for " + ctx.name() + " = " + rendered + "\n";
    o.text += std::string("certified: ") + (certified ? "yes" : note.empty() ? "NO" : "no (" + note + ")") + "\n";
    return o;
}

Outcome evaluate_modify(const Request& r) {
    require_operands(r, 1, 1);
    const GroupContext ctx = require_group(r);
    const Partition& label = r.operands[0];
    std::vector<ModificationStep> steps;
    const SignedLabel standard = standardize(label, ctx, &steps);

    Outcome o;
    bool certified = false;
    std::string note;
    try {
        LaurentPolynomial expected(ctx.rank());
        if (!standard.is_zero()) expected = character(standard.shape, ctx) * BigInt(standard.sign);
        certified = universal_character(label, ctx) == expected;
        o.mismatch = !certified;
    } catch (const OracleCapExceeded& e) {
        note = e.what();
    }
    Decomposition d;
    if (!standard.is_zero()) d.add(standard.shape, standard.sign);
    o.record = {{"terms", terms_json(d)}, {"certified", certified}};
    if (!note.empty()) o.record["detail"] = note;
    std::vector<StandardizationTrace> traces;
    if (!ctx.is_standard(label)) traces.push_back({label, 1, steps, standard});
    if (r.trace) o.record["trace"] = trace_json(traces);
    o.text = r.trace ? trace_text(traces) : "";
    o.text += standard.to_string() + "\n";
    return o;
}

Outcome evaluate_dim(const Request& r) {
    require_operands(r, 1, 1);
    const GroupContext ctx = require_group(r);
    const Partition& label = r.operands[0];
    if (!ctx.is_standard(label)) throw NonstandardInput(label.to_string() + " is not standard for " + ctx.name());
    const BigInt dim = group_dim(label, ctx);
    Outcome o;
    bool certified = false;
    std::string note;
    try {
        certified = character(label, ctx).evaluate_at_one() == dim;
        o.mismatch = !certified;
    } catch (const OracleCapExceeded& e) {
        note = e.what();
    }
    o.record = {{"dimension", big_to_json(dim)}, {"terms", json::array()}, {"certified", certified}};
    if (!note.empty()) o.record["detail"] = note;
    o.text = "dim " + label.to_string() + " for " + ctx.name() + " = " + dim.str() + "\n";
    return o;
}

Outcome evaluate_brauer_dim(const Request& r) {
    require_operands(r, 1, 1);
    if (!r.level) throw BadRequest("brauer-dim needs --level");
    const BrauerLabel label(r.operands[0], *r.level);
    const BigInt dim = brauer_dim(label);
    const int boxes = label.shape().size();
    const BigInt closed = binomial(label.level(), boxes) * odd_double_factorial(label.contractions()) *
                          sym_dim(label.shape());
    Outcome o;
    o.record = {{"dimension", big_to_json(dim)}, {"terms", json::array()}, {"certified", closed == dim}};
    o.mismatch = closed != dim;
    o.text = "dim " + label.shape().to_string() + " at level " + std::to_string(label.level()) + " = " + dim.str() + "\n";
    return o;
}

Outcome evaluate_eq11(const Request& r) {
    require_operands(r, 2, 2);
    const BigRational h = verify_induced_dim(r.operands[0], r.operands[1]);
    const bool integral = denominator(h) == 1;
    Outcome o;
    o.record = {{"h", h.str()}, {"integral", integral}, {"terms", json::array()}, {"certified", integral}};
    o.mismatch = !integral;
    o.text = "h = " + h.str() + ", integral: " + (integral ? "yes" : "no") + "\n";
    return o;
}

std::vector<int> shape_entries(const json& shape) {
    if (!shape.is_array()) throw BadRequest("term shape must be an array of integers");
    std::vector<int> entries;
    for (const json& v : shape) {
        if (!v.is_number_integer()) throw BadRequest("term shape must be an array of integers");
        entries.push_back(v.get<int>());
    }
    return entries;
}

std::int64_t term_mult(const json& term) {
    if (!term.is_object() || !term.contains("shape") || !term.contains("mult") || !term["mult"].is_number_integer())
        throw BadRequest("each term needs an integer \"mult\" and a \"shape\"");
    return term["mult"].get<std::int64_t>();
}

Outcome evaluate_verify_characters(const Request& r) {
    require_operands(r, 2, 2);
    const GroupContext ctx = require_group(r);
    const Partition& a = r.operands[0];
    const Partition& b = r.operands[1];
    Outcome o;
    ProductReport report;
    json terms;
    if (r.claimed_terms) {
        if (!r.claimed_terms->is_array()) throw BadRequest("\"terms\" must be an array");
        if (ctx.family() == Family::SO && ctx.even_orthogonal()) {
            WeightDecomposition claimed;
            for (const json& t : *r.claimed_terms) claimed.add(Weight{shape_entries(t["shape"])}, term_mult(t));
            report = verify_product(a, b, ctx, claimed);
            terms = terms_json(claimed);
        } else {
            Decomposition claimed;
            for (const json& t : *r.claimed_terms) {
                const std::int64_t mult = term_mult(t);
                claimed.add(Partition(shape_entries(t["shape"])), mult);
            }
            report = verify_product(a, b, ctx, claimed);
            terms = terms_json(claimed);
        }
    } else {
        const Decomposition result = kronecker(a, b, ctx);
        report = verify_product(a, b, ctx, result);
        const bool agrees = decompose_via_characters(a, b, ctx) == to_weights(result, ctx);
        report.passed = report.passed && agrees;
        terms = terms_json(result);
    }
    o.record = {{"terms", terms},
                {"certified", report.passed},
                {"dimensions", {big_to_json(report.lhs_dimension), big_to_json(report.rhs_dimension)}}};
    o.mismatch = !report.passed;
    o.text = product_header(r) + " for " + ctx.name() + ": " + (report.passed ? "certified" : "MISMATCH") +
             " (dimensions " + report.lhs_dimension.str() + " vs " + report.rhs_dimension.str() + ")\n";
    if (!report.passed && !report.difference.is_zero()) {
        o.record["difference"] = report.difference.to_string(kExponentScale);
        o.text += "difference: " + report.difference.to_string(kExponentScale) + "\n";
    }
    return o;
}

Outcome evaluate(const Request& r) {
    Outcome o;
    if (r.op == "lr")
        o = evaluate_lr(r);
    else if (r.op == "stable")
        o = evaluate_stable(r);
    else if (r.op == "decompose")
        o = evaluate_decompose(r);
    else if (r.op == "modify")
        o = evaluate_modify(r);
    else if (r.op == "dim")
        o = evaluate_dim(r);
    else if (r.op == "brauer-dim")
        o = evaluate_brauer_dim(r);
    else if (r.op == "verify-eq11")
        o = evaluate_eq11(r);
    else if (r.op == "verify-characters")
        o = evaluate_verify_characters(r);
    else
        throw BadRequest("unknown op '" + r.op + "'");
    json record = {{"op", r.op}, {"inputs", inputs_json(r)}};
    record.update(o.record);
    o.record = std::move(record);
    return o;
}

Partition operand_from_json(const json& v) {
    if (v.is_string()) return parse_partition(v.get<std::string>());
    if (v.is_array()) {
        std::vector<int> rows;
        for (const json& e : v) {
            if (!e.is_number_integer()) throw BadRequest("operand rows must be integers");
            rows.push_back(e.get<int>());
        }
        return Partition(std::move(rows));
    }
    throw BadRequest("operands must be partition strings or integer arrays");
}

Request request_from_json(const json& j) {
    if (!j.is_object() || !j.contains("op") || !j["op"].is_string()) throw BadRequest("record needs a string \"op\"");
    Request r;
    r.op = j["op"].get<std::string>();
    const json inputs = j.value("inputs", json::object());
    if (!inputs.is_object()) throw BadRequest("\"inputs\" must be an object");
    if (inputs.contains("family")) r.family = parse_family(inputs["family"].get<std::string>());
    if (inputs.contains("n")) r.n = inputs["n"].get<int>();
    if (inputs.contains("level")) r.level = inputs["level"].get<int>();
    r.stable = inputs.value("stable", false);
    if (inputs.contains("operands")) {
        if (!inputs["operands"].is_array()) throw BadRequest("\"operands\" must be an array");
        for (const json& v : inputs["operands"]) r.operands.push_back(operand_from_json(v));
    }
    if (j.contains("terms")) r.claimed_terms = j["terms"];
    return r;
}

json read_claim(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw BadRequest("cannot open claim file '" + path + "'");
        in = &file;
    }
    try {
        return json::parse(*in);
    } catch (const json::parse_error& e) {
        throw BadRequest(std::string("claim is not valid JSON: ") + e.what());
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kronecker products of O(n), SO(n) and Sp(2m) tensor irreps by Young diagrams", "ydk"};
    app.require_subcommand(1);

    Request request;
    std::vector<std::string> operand_text;
    std::string family_text;
    int n = 0;
    int level = -1;
    bool as_json = false;
    std::string claim_path;
    std::string batch_path;

    auto add_group = [&](CLI::App* sub, bool required) {
        auto* f = sub->add_option("--family", family_text, "group family: O, SO or Sp");
        auto* d = sub->add_option("--n", n, "vector-space dimension (n = 2m for Sp)");
        if (required) {
            f->required();
            d->required();
        }
    };
    auto add_common = [&](CLI::App* sub, const char* operands_help) {
        // operands are collected from the leftovers: CLI11 would otherwise read "[2,1]" as a list
        sub->allow_extras();
        sub->footer(std::string("Operands: ") + operands_help + ", e.g. \"[2,1]\" or \"3^2,1\"");
        sub->add_flag("--json", as_json, "machine-readable output");
    };

    auto* lr = app.add_subcommand("lr", "outer product A x B, or the coefficient c(A,B;C)");
    add_common(lr, "two or three partitions");
    auto* stable = app.add_subcommand("stable", "large-n product before modification");
    add_common(stable, "two partitions");
    auto* decompose = app.add_subcommand("decompose", "Kronecker product for a group");
    add_common(decompose, "two partitions");
    add_group(decompose, false);
    decompose->add_flag("--trace", request.trace, "show every modified label");
    decompose->add_flag("--stable", request.stable, "print the unmodified product");
    auto* modify = app.add_subcommand("modify", "standardize one label");
    add_common(modify, "one partition");
    add_group(modify, true);
    modify->add_flag("--trace", request.trace, "show the strips removed");
    auto* dim = app.add_subcommand("dim", "Weyl dimension of a label");
    add_common(dim, "one partition");
    add_group(dim, true);
    auto* bdim = app.add_subcommand("brauer-dim", "Brauer-algebra irrep dimension");
    add_common(bdim, "one partition");
    bdim->add_option("--level", level, "number of strands f")->required();
    auto* eq11 = app.add_subcommand("verify-eq11", "induced-dimension ratio h");
    add_common(eq11, "two partitions");
    auto* vchar = app.add_subcommand("verify-characters", "certify a product with Weyl characters");
    add_common(vchar, "two partitions");
    add_group(vchar, false);
    vchar->add_option("--claim", claim_path, "JSON result to check ('-' for stdin)");
    auto* batch = app.add_subcommand("batch", "run line-delimited JSON requests");
    batch->add_option("file", batch_path, "request file")->required();

    std::vector<std::string> argv_storage;
    argv_storage.emplace_back("ydk");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    if (batch->parsed()) return run_batch(batch_path, out, err);

    CLI::App* chosen = app.get_subcommands().front();
    request.op = chosen->get_name();
    try {
        if (!family_text.empty()) request.family = parse_family(family_text);
        if (const CLI::Option* opt = chosen->get_option_no_throw("--n"); opt && opt->count()) request.n = n;
        operand_text = chosen->remaining();
        if (level >= 0) request.level = level;
        for (const std::string& text : operand_text) request.operands.push_back(parse_partition(text));
        if (!claim_path.empty()) {
            json claim = read_claim(claim_path);
            if (!claim.contains("terms")) throw BadRequest("claim has no \"terms\"");
            request.claimed_terms = claim["terms"];
            // inputs recorded in the claim fill in anything not given on the command line
            if (claim.contains("inputs")) {
                const Request from_claim = request_from_json({{"op", request.op}, {"inputs", claim["inputs"]}});
                if (!request.family) request.family = from_claim.family;
                if (!request.n) request.n = from_claim.n;
                if (request.operands.empty()) request.operands = from_claim.operands;
            }
        }
        Outcome outcome = evaluate(request);
        if (as_json)
            out << outcome.record.dump() << "\n";
        else
            out << outcome.text;
        return outcome.mismatch && request.op.rfind("verify-", 0) == 0 ? kExitMismatch : kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open '" << path << "'\n";
        return kExitBadInput;
    }
    std::string line;
    int line_number = 0;
    int records = 0, passed = 0, failed = 0, errors = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++records;
        try {
            const Request request = request_from_json(json::parse(line));
            const Outcome outcome = evaluate(request);
            out << outcome.record.dump() << "\n";
            if (outcome.record.value("certified", false))
                ++passed;
            else
                ++failed;
        } catch (const std::exception& e) {
            ++errors;
            err << "line " << line_number << ": " << e.what() << "\n";
            out << json{{"line", line_number}, {"error", e.what()}}.dump() << "\n";
        }
    }
    out << "summary: " << records << " records, " << passed << " passed, " << failed << " failed, " << errors
        << " errors\n";
    if (failed > 0) return kExitMismatch;
    return errors > 0 ? kExitBadInput : kExitOk;
}

}  // namespace ydk::cli
