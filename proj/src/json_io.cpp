#include "centralaut/json_io.hpp"

#include <nlohmann/json.hpp>

#include "centralaut/error.hpp"

namespace centralaut {

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    fail(errc::invalid_input, "expected an integer or a decimal string");
}

json int_to_json(const Int& v) {
    static const Int lo = Int(INT64_MIN), hi = Int(INT64_MAX);
    if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

json group_to_json(const AbelianPGroup& g) {
    json j;
    j["p"] = g.p_small();
    j["exponents"] = g.exponents();
    return j;
}

AbelianPGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("exponents"))
        fail(errc::invalid_input, "group descriptor needs fields 'p' and 'exponents'");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    std::vector<std::uint32_t> exps;
    for (const auto& e : j.at("exponents")) {
        std::int64_t v = e.get<std::int64_t>();
        if (v <= 0) fail(errc::non_positive_exponent, "exponents must be >= 1");
        exps.push_back(static_cast<std::uint32_t>(v));
    }
    return AbelianPGroup(p, std::move(exps));
}

json matrix_to_json(const EndoMatrix& m) {
    json j;
    j["group"] = group_to_json(m.group);
    json rows = json::array();
    const std::size_t n = m.group.rank();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k) row.push_back(int_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

EndoMatrix matrix_from_json(const json& j) {
    AbelianPGroup g = group_from_json(j.at("group"));
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != g.rank())
        fail(errc::dimension_mismatch, "matrix must have one row per cyclic factor");
    std::vector<Int> raw;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != g.rank())
            fail(errc::dimension_mismatch, "matrix rows must have rank entries");
        for (const auto& e : row) raw.push_back(int_from_json(e));
    }
    return canonicalize(g, raw);
}

json extension_to_json(const CentralExtensionGroup& g) {
    json j;
    j["p"] = g.z().p_small();
    json q;
    q["type"] = "table";
    json qrows = json::array();
    for (std::uint32_t a = 0; a < g.q().order(); ++a) {
        json row = json::array();
        for (std::uint32_t b = 0; b < g.q().order(); ++b) row.push_back(g.q().mul(a, b));
        qrows.push_back(std::move(row));
    }
    q["table"] = std::move(qrows);
    j["q"] = std::move(q);
    j["z"] = group_to_json(g.z());
    json c;
    c["type"] = "table";
    json entries = json::array();
    for (std::uint32_t x = 0; x < g.q().order(); ++x) {
        json row = json::array();
        for (std::uint32_t y = 0; y < g.q().order(); ++y) {
            json cell = json::array();
            for (const auto& v : g.mu(x, y)) cell.push_back(int_to_json(v));
            row.push_back(std::move(cell));
        }
        entries.push_back(std::move(row));
    }
    c["entries"] = std::move(entries);
    j["cocycle"] = std::move(c);
    return j;
}

namespace {

QGroup qgroup_from_json(const json& j, std::uint64_t p) {
    std::string type = j.at("type").get<std::string>();
    if (type == "trivial") return QGroup::trivial();
    if (type == "cyclic") return QGroup::cyclic(j.at("order").get<std::uint32_t>());
    if (type == "elementary")
        return QGroup::elementary(static_cast<std::uint32_t>(p), j.at("rank").get<std::uint32_t>());
    if (type == "table") {
        const auto& rows = j.at("table");
        std::uint32_t order = static_cast<std::uint32_t>(rows.size());
        std::vector<std::uint32_t> t;
        for (const auto& row : rows) {
            if (row.size() != order) fail(errc::invalid_input, "quotient table must be square");
            for (const auto& e : row) t.push_back(e.get<std::uint32_t>());
        }
        return QGroup(std::move(t), order);
    }
    fail(errc::invalid_input, "unknown quotient type '" + type + "'");
}

CocycleTable cocycle_from_json(const json& j, const QGroup& q, const AbelianPGroup& z) {
    std::string type = j.at("type").get<std::string>();
    if (type == "zero") {
        CocycleTable mu;
        mu.values.assign(static_cast<std::size_t>(q.order()) * q.order(), z.zero());
        return mu;
    }
    if (type == "bilinear") {
        Int scale = int_from_json(j.at("scale"));
        const auto& rows = j.at("matrix");
        std::uint32_t rank = static_cast<std::uint32_t>(rows.size());
        std::vector<Int> form;
        for (const auto& row : rows) {
            if (row.size() != rank) fail(errc::invalid_input, "bilinear matrix must be square");
            for (const auto& e : row) form.push_back(int_from_json(e));
        }
        std::size_t coord = j.value("coordinate", 0);
        return bilinear_cocycle(q, z, rank, scale, form, coord);
    }
    if (type == "table") {
        const auto& rows = j.at("entries");
        if (rows.size() != q.order()) fail(errc::dimension_mismatch, "cocycle table must be q x q");
        CocycleTable mu;
        for (const auto& row : rows) {
            if (row.size() != q.order()) fail(errc::dimension_mismatch, "cocycle table must be q x q");
            for (const auto& cell : row) {
                Coords v;
                for (const auto& e : cell) v.push_back(int_from_json(e));
                if (v.size() != z.rank())
                    fail(errc::dimension_mismatch, "cocycle value rank mismatch");
                mu.values.push_back(z.reduce(v));
            }
        }
        return mu;
    }
    fail(errc::invalid_input, "unknown cocycle type '" + type + "'");
}

} // namespace

CentralExtensionGroup extension_from_json(const json& j) {
    AbelianPGroup z = group_from_json(j.at("z"));
    if (j.contains("p") && j.at("p").get<std::uint64_t>() != z.p_small())
        fail(errc::invalid_input, "extension prime disagrees with the center descriptor");
    QGroup q = qgroup_from_json(j.at("q"), z.p_small());
    CocycleTable mu = cocycle_from_json(j.at("cocycle"), q, z);
    return CentralExtensionGroup(std::move(q), std::move(z), std::move(mu));
}

json table_to_json(const TableGroup& t) {
    json j;
    j["order"] = t.order();
    json rows = json::array();
    for (std::uint32_t a = 0; a < t.order(); ++a) {
        json row = json::array();
        for (std::uint32_t b = 0; b < t.order(); ++b) row.push_back(t.mul(a, b));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    return j;
}

TableGroup table_from_json(const json& j) {
    std::uint32_t order = j.at("order").get<std::uint32_t>();
    const auto& rows = j.at("table");
    if (rows.size() != order) fail(errc::invalid_input, "table must have 'order' rows");
    std::vector<std::uint32_t> t;
    for (const auto& row : rows) {
        if (row.size() != order) fail(errc::invalid_input, "table rows must have 'order' entries");
        for (const auto& e : row) t.push_back(e.get<std::uint32_t>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    return TableGroup(std::move(t), order, std::move(labels));
}

json lift_to_json(const CentralExtensionGroup& g, const LiftedAutomorphism& gamma) {
    json j;
    j["theta"] = matrix_to_json(gamma.theta);
    json chi = json::array();
    for (std::uint32_t x = 0; x < g.q().order(); ++x) {
        json cell = json::array();
        for (const auto& v : gamma.chi[x]) cell.push_back(int_to_json(v));
        chi.push_back(std::move(cell));
    }
    j["chi"] = std::move(chi);
    return j;
}

} // namespace centralaut
