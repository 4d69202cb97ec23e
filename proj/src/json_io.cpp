#include "toledo/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace toledo {

json to_json(const CycloNum& x)
{
    json c = json::array();
    for (const auto& q : x.coeffs()) c.push_back(rational_string(q));
    return json{{"order", x.order()}, {"coeffs", c}};
}

CycloNum cyclo_from_json(const json& j)
{
    if (j.is_string()) return CycloNum(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return CycloNum(j.get<long>());
    int N = j.at("order").get<int>();
    const auto& c = j.at("coeffs");
    CycloNum x = CycloNum::zero(N);
    for (size_t i = 0; i < c.size(); ++i) {
        Rational q = c[i].is_string() ? parse_rational(c[i].get<std::string>()) : Rational(c[i].get<long>());
        x += CycloNum(q, N) * CycloNum::zeta(N, static_cast<long>(i));
    }
    return x;
}

json to_json(const CMat& m)
{
    json a = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        a.push_back(row);
    }
    return a;
}

CMat cmat_from_json(const json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("matrix JSON must be a list of rows");
    CMat m(j.size(), j[0].size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != m.cols()) throw std::invalid_argument("matrix JSON rows have different lengths");
        for (size_t k = 0; k < m.cols(); ++k) m(i, k) = cyclo_from_json(j[i][k]);
    }
    return m;
}

json to_json(const H2Class& c)
{
    json j;
    j["g"] = c.g();
    j["n"] = c.n();
    j["coeffs"] = json::object();
    for (const auto& [k, v] : c.coeffs()) j["coeffs"][k] = rational_string(v);
    return j;
}

H2Class h2class_from_json(const json& j)
{
    H2Class c(j.at("g").get<int>(), j.at("n").get<int>());
    for (const auto& [k, v] : j.at("coeffs").items())
        c.add(k, v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>()));
    return c;
}

json to_json(const Table& t)
{
    json rows = json::array();
    for (const auto& r : t.rows) {
        json o = json::object();
        for (size_t i = 0; i < t.columns.size() && i < r.size(); ++i) o[t.columns[i]] = r[i];
        rows.push_back(o);
    }
    return json{{"table", t.name}, {"columns", t.columns}, {"rows", rows}};
}

json to_json(const QMat& m)
{
    json a = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(rational_string(m(i, j)));
        a.push_back(row);
    }
    return a;
}

json to_json(const R1Matrix& R)
{
    json r1 = json::array();
    for (const auto& x : R.r1) r1.push_back(rational_string(x));
    return json{{"R1", to_json(R.R)}, {"r1", r1}, {"R1_prime", to_json(R.Rprime)}};
}

static std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
    return o + "\"";
}

static std::string md_field(const std::string& s)
{
    std::string o;
    for (char c : s) o += c == '|' ? std::string("\\|") : std::string(1, c);
    return o;
}

static json envelope(const std::string& command, const json& params, const json& payload)
{
    return json{{"command", command}, {"parameters", params}, {"format", "json"}, {"payload", payload}};
}

std::string render_tables(const std::vector<Table>& tables, const std::string& format, const std::string& command,
                          const json& params)
{
    std::ostringstream os;
    if (format == "json") {
        json p = json::array();
        for (const auto& t : tables) p.push_back(to_json(t));
        os << envelope(command, params, tables.size() == 1 ? p[0] : p).dump(2) << "\n";
    } else if (format == "csv") {
        for (size_t k = 0; k < tables.size(); ++k) {
            const auto& t = tables[k];
            if (k) os << "\n";
            os << "# " << t.name << "\n";
            for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
            os << "\n";
            for (const auto& r : t.rows) {
                for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
                os << "\n";
            }
        }
    } else if (format == "md") {
        for (size_t k = 0; k < tables.size(); ++k) {
            const auto& t = tables[k];
            if (k) os << "\n";
            os << "### " << t.name << "\n\n|";
            for (const auto& c : t.columns) os << " " << md_field(c) << " |";
            os << "\n|";
            for (size_t i = 0; i < t.columns.size(); ++i) os << "---|";
            os << "\n";
            for (const auto& r : t.rows) {
                os << "|";
                for (const auto& x : r) os << " " << md_field(x) << " |";
                os << "\n";
            }
        }
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return os.str();
}

std::string render_payload(const json& payload, const std::string& format, const std::string& command,
                           const json& params)
{
    if (format == "json") return envelope(command, params, payload).dump(2) + "\n";
    // flat key/value view for scalar payloads
    Table t{command, {"key", "value"}, {}};
    for (const auto& [k, v] : payload.items()) t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    return render_tables({t}, format, command, params);
}

}  // namespace toledo
