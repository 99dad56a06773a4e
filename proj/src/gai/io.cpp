#include "gai/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace gai::io {

using ordered_json = nlohmann::ordered_json;

namespace {

long long parse_ll(const std::string& s) {
    long long v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError("not an integer: '" + s + "'");
    return v;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

std::string degree_to_string(int index, int levels) {
    const int n = levels - 1;
    if (index < 0 || index > n)
        throw PreconditionError("degree index " + std::to_string(index) + " outside the chain");
    if (index == 0) return "0";
    if (index == n) return "1";
    const int g = std::gcd(index, n);
    const long long p = index / g;
    long long q = n / g;
    long long twos = 0, fives = 0, rest = q;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return std::to_string(p) + "/" + std::to_string(q);
    const long long e = std::max(twos, fives);
    long long scale = 1;
    for (long long i = 0; i < e; ++i) scale *= 10;
    long long digits = p * (scale / q);
    std::string frac(size_t(e), '0');
    for (long long i = e - 1; i >= 0; --i) {
        frac[size_t(i)] = char('0' + digits % 10);
        digits /= 10;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return "0." + frac;
}

Degree parse_degree(const std::string& raw, int levels) {
    const int n = levels - 1;
    const std::string text = trim(raw);
    if (text.empty()) throw ParseError("empty degree literal");

    if (const size_t slash = text.find('/'); slash != std::string::npos) {
        const long long p = parse_ll(text.substr(0, slash));
        const long long q = parse_ll(text.substr(slash + 1));
        if (q <= 0) throw ParseError("degree '" + text + "' has a non-positive denominator");
        if (p < 0 || p > q)
            throw ParseError("degree '" + text + "' is outside [0, 1]");
        const long long num = p * n;
        if (num % q != 0)
            throw ParseError("degree '" + text + "' does not lie on a chain with " +
                             std::to_string(levels) + " levels");
        return Degree(num / q);
    }

    if (const size_t dot = text.find('.'); dot != std::string::npos) {
        const std::string ip = text.substr(0, dot);
        const std::string fp = text.substr(dot + 1);
        if (ip.empty() || fp.empty())
            throw ParseError("malformed decimal degree '" + text + "'");
        const long long intpart = parse_ll(ip);
        if (intpart < 0 || intpart > 1)
            throw ParseError("degree '" + text + "' is outside [0, 1]");
        if (fp.size() > 12) throw ParseError("degree '" + text + "' has too many digits");
        const long long fracpart = parse_ll(fp);
        long long scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        const long long num = intpart * scale + fracpart;
        if (num > scale) throw ParseError("degree '" + text + "' is outside [0, 1]");
        const long long scaled = num * n;
        if (scaled % scale != 0)
            throw ParseError("degree '" + text + "' does not lie on a chain with " +
                             std::to_string(levels) + " levels");
        return Degree(scaled / scale);
    }

    const long long v = parse_ll(text);
    if (v == 0) return 0;
    if (v == 1) return Degree(n);
    throw ParseError("degree '" + text + "' is outside [0, 1]");
}

std::string lset_to_string(const LSet& s, const AttributeUniverse& u, int levels) {
    if (s.size() != u.size())
        throw PreconditionError("universe mismatch: graded set has size " +
                                std::to_string(s.size()));
    std::string out = "{";
    bool first = true;
    for (size_t i = 0; i < u.size(); ++i) {
        if (s[i] == 0) continue;
        if (!first) out += ", ";
        first = false;
        if (int(s[i]) == levels - 1)
            out += u.name(i);
        else
            out += degree_to_string(s[i], levels) + "/" + u.name(i);
    }
    out += "}";
    return out;
}

namespace {

struct RawItem {
    std::string degree; // empty means degree one
    std::string name;
    size_t column;
};

/// Splits the text form of one graded set into raw items. base_column is the
/// offset of `text` inside its source line, for error reporting.
std::vector<RawItem> split_lset_text(const std::string& text, size_t base_column) {
    auto fail = [&](const std::string& msg, size_t off) -> std::vector<RawItem> {
        throw ParseError(msg + " (column " + std::to_string(base_column + off + 1) + ")");
    };
    size_t open = text.find_first_not_of(" \t");
    if (open == std::string::npos || text[open] != '{')
        return fail("expected '{'", open == std::string::npos ? 0 : open);
    size_t close = text.find('}', open);
    if (close == std::string::npos) return fail("missing '}'", text.size() ? text.size() - 1 : 0);
    const std::string after = trim(text.substr(close + 1));
    if (!after.empty()) return fail("unexpected text after '}'", close + 1);

    std::vector<RawItem> items;
    size_t pos = open + 1;
    while (pos <= close) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos || comma > close) comma = close;
        std::string piece = text.substr(pos, comma - pos);
        const std::string trimmed = trim(piece);
        if (trimmed.empty()) {
            if (items.empty() && comma == close) break;
            return fail("empty item", pos);
        }
        RawItem item;
        item.column = base_column + pos;
        // Attribute names cannot contain '/', so the last slash separates a
        // degree literal (possibly a fraction) from the name.
        if (const size_t slash = trimmed.rfind('/'); slash != std::string::npos) {
            item.degree = trim(trimmed.substr(0, slash));
            item.name = trim(trimmed.substr(slash + 1));
        } else {
            item.name = trimmed;
        }
        if (item.name.empty()) return fail("missing attribute name", pos);
        items.push_back(std::move(item));
        pos = comma + 1;
    }
    return items;
}

LSet lset_from_items(const std::vector<RawItem>& items, const AttributeUniverse& u, int levels) {
    LSet out(u.size());
    for (const auto& item : items) {
        const auto idx = u.index_of(item.name);
        if (!idx)
            throw ParseError("unknown attribute '" + item.name + "' (column " +
                             std::to_string(item.column + 1) + ")");
        const Degree d = item.degree.empty() ? Degree(levels - 1) : parse_degree(item.degree, levels);
        if (out[*idx] != 0)
            throw ParseError("attribute '" + item.name + "' listed twice (column " +
                             std::to_string(item.column + 1) + ")");
        out[*idx] = d;
    }
    return out;
}

struct RawImplication {
    std::vector<RawItem> antecedent;
    std::vector<RawItem> consequent;
};

RawImplication split_implication_text(const std::string& text) {
    const size_t arrow = text.find("=>");
    if (arrow == std::string::npos) throw ParseError("missing '=>'");
    RawImplication out;
    out.antecedent = split_lset_text(text.substr(0, arrow), 0);
    out.consequent = split_lset_text(text.substr(arrow + 2), arrow + 2);
    return out;
}

} // namespace

LSet parse_lset(const std::string& text, const AttributeUniverse& u, int levels) {
    return lset_from_items(split_lset_text(text, 0), u, levels);
}

std::string implication_to_string(const Implication& f, const AttributeUniverse& u, int levels) {
    return lset_to_string(f.antecedent, u, levels) + " => " +
           lset_to_string(f.consequent, u, levels);
}

Implication parse_implication(const std::string& text, const AttributeUniverse& u, int levels) {
    RawImplication raw = split_implication_text(text);
    return Implication{lset_from_items(raw.antecedent, u, levels),
                       lset_from_items(raw.consequent, u, levels)};
}

std::string theory_to_text(const Theory& t) {
    std::string out;
    for (const Implication& f : t.formulas())
        out += implication_to_string(f, t.universe(), t.chain().levels()) + "\n";
    return out;
}

Theory parse_theory_text(const std::string& text, const ResiduatedChain& chain,
                         const Hedge& hedge) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }

    std::vector<RawImplication> raw;
    std::vector<size_t> line_numbers;
    std::vector<std::string> names;
    auto note_names = [&](const std::vector<RawItem>& items) {
        for (const auto& item : items)
            if (std::find(names.begin(), names.end(), item.name) == names.end())
                names.push_back(item.name);
    };
    for (size_t ln = 0; ln < lines.size(); ++ln) {
        const std::string stripped = trim(lines[ln]);
        if (stripped.empty() || stripped[0] == '#') continue;
        try {
            RawImplication ri = split_implication_text(lines[ln]);
            note_names(ri.antecedent);
            note_names(ri.consequent);
            raw.push_back(std::move(ri));
            line_numbers.push_back(ln + 1);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(ln + 1) + ": " + e.what());
        }
    }
    if (names.empty())
        throw ParseError("no implications found; cannot infer an attribute universe");

    AttributeUniverse universe = [&] {
        try {
            return AttributeUniverse(names);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }();

    std::vector<Implication> formulas;
    formulas.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        try {
            formulas.push_back(Implication{lset_from_items(raw[i].antecedent, universe,
                                                           chain.levels()),
                                           lset_from_items(raw[i].consequent, universe,
                                                           chain.levels())});
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_numbers[i]) + ": " + e.what());
        }
    }
    return Theory(chain, hedge, std::move(universe), std::move(formulas));
}

namespace {

ordered_json chain_json(const ResiduatedChain& chain) {
    ordered_json j;
    j["variety"] = variety_name(chain.variety());
    j["levels"] = chain.levels();
    if (chain.variety() == Variety::custom) {
        ordered_json ten = ordered_json::array();
        ordered_json res = ordered_json::array();
        const int L = chain.levels();
        for (int a = 0; a < L; ++a) {
            ordered_json trow = ordered_json::array();
            ordered_json rrow = ordered_json::array();
            for (int b = 0; b < L; ++b) {
                trow.push_back(int(chain.tensor(Degree(a), Degree(b))));
                rrow.push_back(int(chain.residuum(Degree(a), Degree(b))));
            }
            ten.push_back(std::move(trow));
            res.push_back(std::move(rrow));
        }
        j["tensor"] = std::move(ten);
        j["residuum"] = std::move(res);
    }
    return j;
}

std::vector<Degree> table_from_json(const ordered_json& j, int levels, const char* what) {
    if (!j.is_array() || int(j.size()) != levels)
        throw ParseError(std::string(what) + " table must be a " + std::to_string(levels) + "x" +
                         std::to_string(levels) + " array");
    std::vector<Degree> out;
    out.reserve(size_t(levels) * levels);
    for (const auto& row : j) {
        if (!row.is_array() || int(row.size()) != levels)
            throw ParseError(std::string(what) + " table must be a " + std::to_string(levels) +
                             "x" + std::to_string(levels) + " array");
        for (const auto& cell : row) {
            if (!cell.is_number_integer() || cell.get<long long>() < 0 ||
                cell.get<long long>() >= levels)
                throw ParseError(std::string(what) + " table entries must be degree indices in "
                                                     "[0, levels)");
            out.push_back(Degree(cell.get<long long>()));
        }
    }
    return out;
}

ResiduatedChain chain_from_json_obj(const ordered_json& j) {
    if (!j.is_object() || !j.contains("variety") || !j.contains("levels"))
        throw ParseError("chain must be an object with 'variety' and 'levels'");
    if (!j["levels"].is_number_integer())
        throw ParseError("chain levels must be an integer");
    const int levels = j["levels"].get<int>();
    const auto v = variety_from_name(j["variety"].get<std::string>());
    if (!v) throw ParseError("unknown chain variety '" + j["variety"].get<std::string>() + "'");
    if (*v == Variety::custom) {
        if (!j.contains("tensor") || !j.contains("residuum"))
            throw ParseError("custom chain needs 'tensor' and 'residuum' tables");
        if (levels < 2 || levels > kMaxLevels)
            throw ParseError("chain levels must be in [2, " + std::to_string(kMaxLevels) + "]");
        return ResiduatedChain::custom(levels, table_from_json(j["tensor"], levels, "tensor"),
                                       table_from_json(j["residuum"], levels, "residuum"));
    }
    if (levels < 2 || levels > kMaxLevels)
        throw ParseError("chain levels must be in [2, " + std::to_string(kMaxLevels) + "]");
    return ResiduatedChain::make(*v, levels);
}

ordered_json hedge_json(const Hedge& hedge) {
    if (hedge.kind() == HedgeKind::identity) return "identity";
    if (hedge.kind() == HedgeKind::globalization) return "globalization";
    ordered_json j;
    ordered_json table = ordered_json::array();
    for (Degree d : hedge.table()) table.push_back(int(d));
    j["table"] = std::move(table);
    return j;
}

Hedge hedge_from_json_obj(const ordered_json& j, const ResiduatedChain& chain) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "identity") return Hedge::identity(chain.levels());
        if (name == "globalization") return Hedge::globalization(chain.levels());
        throw ParseError("unknown hedge '" + name + "'");
    }
    if (j.is_object() && j.contains("table")) {
        const auto& tj = j["table"];
        if (!tj.is_array() || int(tj.size()) != chain.levels())
            throw ParseError("hedge table must list one degree index per level");
        std::vector<Degree> table;
        table.reserve(tj.size());
        for (const auto& cell : tj) {
            if (!cell.is_number_integer() || cell.get<long long>() < 0 ||
                cell.get<long long>() >= chain.levels())
                throw ParseError("hedge table entries must be degree indices in [0, levels)");
            table.push_back(Degree(cell.get<long long>()));
        }
        return Hedge::custom(chain, std::move(table));
    }
    throw ParseError("hedge must be 'identity', 'globalization' or an object with 'table'");
}

ordered_json lset_json(const LSet& s, const AttributeUniverse& u, int levels) {
    ordered_json j = ordered_json::object();
    for (size_t i = 0; i < u.size(); ++i)
        if (s[i] != 0) j[u.name(i)] = degree_to_string(s[i], levels);
    return j;
}

LSet lset_from_json_obj(const ordered_json& j, const AttributeUniverse& u, int levels) {
    if (!j.is_object()) throw ParseError("graded set must be an object of attribute: degree");
    LSet out(u.size());
    for (const auto& [key, value] : j.items()) {
        const auto idx = u.index_of(key);
        if (!idx) throw ParseError("unknown attribute '" + key + "'");
        Degree d;
        if (value.is_string()) {
            d = parse_degree(value.get<std::string>(), levels);
        } else if (value.is_number_integer()) {
            const long long v = value.get<long long>();
            if (v == 0)
                d = 0;
            else if (v == 1)
                d = Degree(levels - 1);
            else
                throw ParseError("degree for '" + key + "' is outside [0, 1]");
        } else {
            throw ParseError("degree for '" + key +
                             "' must be an exact string literal such as \"0.5\"");
        }
        out[*idx] = d;
    }
    return out;
}

AttributeUniverse universe_from_json(const ordered_json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("'attributes' must be a non-empty array of names");
    std::vector<std::string> names;
    names.reserve(j.size());
    for (const auto& cell : j) {
        if (!cell.is_string()) throw ParseError("attribute names must be strings");
        names.push_back(cell.get<std::string>());
    }
    try {
        return AttributeUniverse(std::move(names));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

} // namespace

std::string chain_to_json(const ResiduatedChain& chain) {
    return chain_json(chain).dump(2);
}

std::string hedge_to_json(const Hedge& hedge) {
    return hedge_json(hedge).dump(2);
}

std::string theory_to_json(const Theory& t) {
    ordered_json j;
    j["chain"] = chain_json(t.chain());
    j["hedge"] = hedge_json(t.hedge());
    j["attributes"] = t.universe().names();
    ordered_json formulas = ordered_json::array();
    for (const Implication& f : t.formulas()) {
        ordered_json fj;
        fj["if"] = lset_json(f.antecedent, t.universe(), t.chain().levels());
        fj["then"] = lset_json(f.consequent, t.universe(), t.chain().levels());
        formulas.push_back(std::move(fj));
    }
    j["formulas"] = std::move(formulas);
    return j.dump(2);
}

Theory theory_from_json(const std::string& json_text) {
    const ordered_json j = parse_json(json_text);
    if (!j.is_object()) throw ParseError("theory file must be a JSON object");
    if (!j.contains("chain")) throw ParseError("theory file is missing 'chain'");
    if (!j.contains("hedge")) throw ParseError("theory file is missing 'hedge'");
    if (!j.contains("attributes")) throw ParseError("theory file is missing 'attributes'");
    if (!j.contains("formulas")) throw ParseError("theory file is missing 'formulas'");
    ResiduatedChain chain = chain_from_json_obj(j["chain"]);
    Hedge hedge = hedge_from_json_obj(j["hedge"], chain);
    AttributeUniverse universe = universe_from_json(j["attributes"]);
    if (!j["formulas"].is_array()) throw ParseError("'formulas' must be an array");
    std::vector<Implication> formulas;
    formulas.reserve(j["formulas"].size());
    for (const auto& fj : j["formulas"]) {
        if (!fj.is_object() || !fj.contains("if") || !fj.contains("then"))
            throw ParseError("each formula needs 'if' and 'then' graded sets");
        formulas.push_back(Implication{lset_from_json_obj(fj["if"], universe, chain.levels()),
                                       lset_from_json_obj(fj["then"], universe, chain.levels())});
    }
    return Theory(std::move(chain), std::move(hedge), std::move(universe), std::move(formulas));
}

std::string context_to_json(const FormalContext& ctx) {
    ordered_json j;
    j["chain"] = chain_json(ctx.chain());
    j["hedge"] = hedge_json(ctx.hedge());
    j["objects"] = ctx.objects();
    j["attributes"] = ctx.universe().names();
    ordered_json rows = ordered_json::array();
    for (size_t x = 0; x < ctx.object_count(); ++x) {
        ordered_json row = ordered_json::array();
        for (size_t y = 0; y < ctx.attribute_count(); ++y)
            row.push_back(degree_to_string(ctx.at(x, y), ctx.chain().levels()));
        rows.push_back(std::move(row));
    }
    j["incidence"] = std::move(rows);
    return j.dump(2);
}

FormalContext context_from_json(const std::string& json_text) {
    const ordered_json j = parse_json(json_text);
    if (!j.is_object()) throw ParseError("context file must be a JSON object");
    for (const char* key : {"chain", "hedge", "objects", "attributes", "incidence"})
        if (!j.contains(key))
            throw ParseError(std::string("context file is missing '") + key + "'");
    ResiduatedChain chain = chain_from_json_obj(j["chain"]);
    Hedge hedge = hedge_from_json_obj(j["hedge"], chain);
    AttributeUniverse universe = universe_from_json(j["attributes"]);
    if (!j["objects"].is_array() || j["objects"].empty())
        throw ParseError("'objects' must be a non-empty array of names");
    std::vector<std::string> objects;
    for (const auto& cell : j["objects"]) {
        if (!cell.is_string()) throw ParseError("object names must be strings");
        objects.push_back(cell.get<std::string>());
    }
    const auto& rows = j["incidence"];
    if (!rows.is_array() || rows.size() != objects.size())
        throw ParseError("'incidence' must have one row per object");
    std::vector<Degree> incidence;
    incidence.reserve(objects.size() * universe.size());
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != universe.size())
            throw ParseError("each incidence row must have one cell per attribute");
        for (const auto& cell : row) {
            if (cell.is_string())
                incidence.push_back(parse_degree(cell.get<std::string>(), chain.levels()));
            else if (cell.is_number_integer() && cell.get<long long>() == 0)
                incidence.push_back(0);
            else if (cell.is_number_integer() && cell.get<long long>() == 1)
                incidence.push_back(chain.top());
            else
                throw ParseError("incidence cells must be exact degree string literals");
        }
    }
    try {
        return FormalContext(std::move(chain), std::move(hedge), std::move(objects),
                             std::move(universe), std::move(incidence));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::string trace_to_json(const ReductionTrace& trace) {
    const auto& u = trace.initial.universe();
    const int levels = trace.initial.chain().levels();
    ordered_json j;
    ordered_json steps = ordered_json::array();
    for (const ReductionStep& s : trace.steps) {
        ordered_json sj;
        sj["target"] = s.target;
        sj["source"] = s.source;
        sj["increment"] = lset_json(s.increment, u, levels);
        sj["antecedent"] = lset_json(s.new_antecedent, u, levels);
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    return j.dump(2);
}

std::vector<RecordedStep> steps_from_json(const std::string& json_text,
                                          const AttributeUniverse& u, int levels) {
    const ordered_json j = parse_json(json_text);
    const ordered_json* arr = nullptr;
    if (j.is_array()) {
        arr = &j;
    } else if (j.is_object() && j.contains("steps") && j["steps"].is_array()) {
        arr = &j["steps"];
    } else {
        throw ParseError("steps file must be an array of steps or an object with 'steps'");
    }
    std::vector<RecordedStep> out;
    out.reserve(arr->size());
    for (const auto& sj : *arr) {
        if (!sj.is_object() || !sj.contains("target") || !sj.contains("source"))
            throw ParseError("each step needs integer 'target' and 'source' indices");
        if (!sj["target"].is_number_integer() || !sj["source"].is_number_integer() ||
            sj["target"].get<long long>() < 0 || sj["source"].get<long long>() < 0)
            throw ParseError("step indices must be non-negative integers");
        RecordedStep step;
        step.choice.target = size_t(sj["target"].get<long long>());
        step.choice.source = size_t(sj["source"].get<long long>());
        if (sj.contains("increment"))
            step.increment = lset_from_json_obj(sj["increment"], u, levels);
        if (sj.contains("antecedent"))
            step.antecedent = lset_from_json_obj(sj["antecedent"], u, levels);
        out.push_back(std::move(step));
    }
    return out;
}

std::string incidence_to_csv(const FormalContext& ctx) {
    std::string out = "object";
    for (const auto& name : ctx.universe().names()) out += "," + name;
    out += "\n";
    for (size_t x = 0; x < ctx.object_count(); ++x) {
        out += ctx.objects()[x];
        for (size_t y = 0; y < ctx.attribute_count(); ++y)
            out += "," + degree_to_string(ctx.at(x, y), ctx.chain().levels());
        out += "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << content;
    if (!out) throw Error("failed while writing file '" + path + "'");
}

} // namespace gai::io
