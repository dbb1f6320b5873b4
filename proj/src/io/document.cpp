#include "autsys/document.hpp"

#include <algorithm>
#include <sstream>

#include "autsys/error.hpp"

namespace autsys {
namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// Position of the first quoted occurrence of `label` at or after `from`.
[[noreturn]] void fail_at_label(std::string_view text, std::size_t from, const std::string& label,
                                const std::string& message)
{
    const std::string quoted = json(label).dump();
    std::size_t at = text.find(quoted, from);
    if (at == std::string_view::npos)
        at = from;
    auto [line, column] = line_column(text, at);
    throw ParseError(line, column, message);
}

[[noreturn]] void fail_at_key(std::string_view text, const std::string& key, const std::string& message)
{
    std::size_t at = text.find("\"" + key + "\"");
    auto [line, column] = line_column(text, at == std::string_view::npos ? 0 : at);
    throw ParseError(line, column, message);
}

std::vector<std::string> sorted_names(const AutonomousSystem& system, Subset s)
{
    return system.names(s); // labels are stored sorted, so index order is label order
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string inline_list(const std::vector<std::string>& names)
{
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            out += ", ";
        out += quote(names[i]);
    }
    return out + "]";
}

} // namespace

std::vector<Subset> canonical_member_order(const AutonomousSystem& system)
{
    std::vector<Subset> members(system.family().begin(), system.family().end());
    std::sort(members.begin(), members.end(), [&](Subset a, Subset b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return sorted_names(system, a) < sorted_names(system, b);
    });
    return members;
}

std::variant<AutonomousSystem, ValidationReport> parse_system(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(line, column, "malformed document: " + std::string(e.what()));
    }
    if (!doc.is_object())
        throw ParseError(1, 1, "document must be an object with keys \"ground\" and \"autonomous\"");
    for (const auto& [key, value] : doc.items())
        if (key != "ground" && key != "autonomous")
            fail_at_key(text, key, "unexpected key \"" + key + "\"");
    if (!doc.contains("ground") || !doc["ground"].is_array())
        throw ParseError(1, 1, "\"ground\" must be a list of labels");
    if (!doc.contains("autonomous") || !doc["autonomous"].is_array())
        throw ParseError(1, 1, "\"autonomous\" must be a list of lists of labels");

    std::vector<std::string> labels;
    for (const auto& item : doc["ground"]) {
        if (!item.is_string())
            fail_at_key(text, "ground", "ground labels must be strings");
        labels.push_back(item.get<std::string>());
    }
    if (labels.size() > kMaxGround)
        fail_at_key(text, "ground", "ground has more than 64 elements");
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            fail_at_label(text, text.find("\"ground\""), *dup, "duplicate ground label \"" + *dup + "\"");
    }

    const std::size_t family_at = text.find("\"autonomous\"");
    std::vector<Subset> family{Subset{}};
    for (const auto& set : doc["autonomous"]) {
        if (!set.is_array())
            fail_at_key(text, "autonomous", "every autonomous set must be a list of labels");
        Subset s;
        for (const auto& item : set) {
            if (!item.is_string())
                fail_at_key(text, "autonomous", "set members must be label strings");
            const auto name = item.get<std::string>();
            auto it = std::find(labels.begin(), labels.end(), name);
            if (it == labels.end())
                fail_at_label(text, family_at, name, "unknown label \"" + name + "\" in an autonomous set");
            s = s.with(Element{static_cast<unsigned>(it - labels.begin())});
        }
        family.push_back(s);
    }

    ValidationReport report = validate(labels, family);
    if (!report.ok())
        return report;
    return AutonomousSystem::make(std::move(labels), family);
}

AutonomousSystem read_system(std::string_view text)
{
    auto parsed = parse_system(text);
    if (auto* system = std::get_if<AutonomousSystem>(&parsed))
        return std::move(*system);
    throw Error(ErrorKind::MalformedInput, "document family violates the axioms: " +
                                               to_json(std::get<ValidationReport>(parsed)).dump());
}

PartialOrder read_poset(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(line, column, "malformed document: " + std::string(e.what()));
    }
    if (!doc.is_object())
        throw ParseError(1, 1, "order document must be an object with keys \"points\" and \"less_than\"");
    for (const auto& [key, value] : doc.items())
        if (key != "points" && key != "less_than")
            fail_at_key(text, key, "unexpected key \"" + key + "\"");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw ParseError(1, 1, "\"points\" must be a list of labels");
    std::vector<std::string> labels;
    for (const auto& item : doc["points"]) {
        if (!item.is_string())
            fail_at_key(text, "points", "point labels must be strings");
        labels.push_back(item.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    if (doc.contains("less_than")) {
        if (!doc["less_than"].is_array())
            fail_at_key(text, "less_than", "\"less_than\" must be a list of [lower, upper] pairs");
        for (const auto& pair : doc["less_than"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
                fail_at_key(text, "less_than", "every relation must be a [lower, upper] pair of labels");
            pairs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
    }
    return PartialOrder::from_pairs(std::move(labels), pairs);
}

std::string serialize(const AutonomousSystem& system)
{
    std::string out = "{\n  \"ground\": " + inline_list(system.labels()) + ",\n  \"autonomous\": [\n";
    const auto members = canonical_member_order(system);
    for (std::size_t i = 0; i < members.size(); ++i) {
        out += "    " + inline_list(sorted_names(system, members[i]));
        out += (i + 1 < members.size()) ? ",\n" : "\n";
    }
    return out + "  ]\n}\n";
}

json to_json(const AutonomousSystem& system)
{
    json sets = json::array();
    for (Subset m : canonical_member_order(system))
        sets.push_back(sorted_names(system, m));
    return json{{"ground", system.labels()}, {"autonomous", sets}};
}

json to_json(const ValidationReport& report)
{
    auto names = [&](Subset s) {
        std::vector<std::string> out;
        for (Element x : s)
            out.push_back(report.ground[x.index]);
        return out;
    };
    json unions = json::array();
    for (auto [a, b] : report.union_violations)
        unions.push_back(json::array({names(a), names(b)}));
    json inaccessible = json::array();
    for (Subset a : report.accessibility_violations)
        inaccessible.push_back(names(a));
    return json{{"valid", report.ok()},
                {"missing_empty", report.missing_empty},
                {"union_violations", unions},
                {"accessibility_violations", inaccessible}};
}

json to_json(const PartialOrder& order)
{
    json pairs = json::array();
    for (auto [x, y] : order.strict_pairs())
        pairs.push_back(json::array({order.labels()[x.index], order.labels()[y.index]}));
    return json{{"points", order.labels()}, {"less_than", pairs}};
}

json to_json(const AutonomousSystem& system, const CanonicalOrder& order)
{
    json pairs = json::array();
    for (auto [x, y] : order.strict_pairs())
        pairs.push_back(json::array({system.label(x), system.label(y)}));
    json covers = json::array();
    for (auto [x, y] : order.covering_pairs())
        covers.push_back(json::array({system.label(x), system.label(y)}));
    return json{{"carrier", system.names(order.carrier())}, {"less_than", pairs}, {"covers", covers}};
}

json to_json(const ReductionStep& step, const AutonomousSystem& applied_to)
{
    json out{{"kind", to_string(step.kind)}};
    if (step.kind == StepKind::Quotient && step.partition) {
        json cells = json::array();
        for (Subset cell : step.partition->cells())
            cells.push_back(applied_to.names(cell));
        out["cells"] = cells;
        out["labels"] = step.partition->labels();
    } else {
        out["elements"] = applied_to.names(step.operand);
    }
    return out;
}

json to_json(const WitnessSequence& witness, const AutonomousSystem& target)
{
    json steps = json::array();
    json intermediates = json::array();
    const AutonomousSystem* before = &witness.source;
    for (std::size_t i = 0; i < witness.steps.size(); ++i) {
        steps.push_back(to_json(witness.steps[i], *before));
        intermediates.push_back(to_json(witness.intermediates[i]));
        before = &witness.intermediates[i];
    }
    json iso = json::object();
    const AutonomousSystem& last = witness.final_system();
    for (std::size_t i = 0; i < witness.final_iso.size() && i < last.size(); ++i)
        iso[last.labels()[i]] = target.labels().at(witness.final_iso[i]);
    return json{{"source", to_json(witness.source)},
                {"steps", steps},
                {"intermediates", intermediates},
                {"final_iso", iso},
                {"target", to_json(target)},
                {"subdot", witness.is_subdot()}};
}

std::vector<std::string> narrate(const WitnessSequence& witness)
{
    std::vector<std::string> lines;
    const AutonomousSystem* before = &witness.source;
    auto braces = [](const std::vector<std::string>& names) {
        std::string s = "{";
        for (std::size_t i = 0; i < names.size(); ++i)
            s += (i ? "," : "") + names[i];
        return s + "}";
    };
    lines.push_back("start: " + std::to_string(before->size()) + " elements, " +
                    std::to_string(before->family().size()) + " autonomous sets");
    for (std::size_t i = 0; i < witness.steps.size(); ++i) {
        const ReductionStep& step = witness.steps[i];
        const AutonomousSystem& after = witness.intermediates[i];
        std::string line = std::to_string(i + 1) + ". ";
        if (step.kind == StepKind::Quotient && step.partition) {
            line += "quotient by cells";
            for (Subset cell : step.partition->cells())
                line += " " + braces(before->names(cell));
        } else {
            line += std::string(to_string(step.kind)) + " " + braces(before->names(step.operand));
        }
        line += " -> " + braces(after.labels()) + ", " + std::to_string(after.family().size()) + " autonomous sets";
        lines.push_back(std::move(line));
        before = &after;
    }
    return lines;
}

std::string hasse_dot(const AutonomousSystem& system, const CanonicalOrder& order)
{
    std::ostringstream out;
    out << "digraph canonical_order {\n  rankdir=BT;\n";
    for (Element x : order.carrier())
        out << "  " << quote(system.label(x)) << ";\n";
    for (auto [x, y] : order.covering_pairs())
        out << "  " << quote(system.label(x)) << " -> " << quote(system.label(y)) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace autsys
