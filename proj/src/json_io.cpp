#include "mh/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mh {
namespace io {

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string hlaurent_key(int e) { return std::to_string(e); }

json hlaurent_to_json(const cutjoin::HLaurent& h) {
    json j = json::object();
    for (const auto& [e, c] : h.terms()) j[hlaurent_key(e)] = c.to_string();
    return j;
}

}  // namespace

json symfun_to_json(const SymFunD& f) {
    json coeffs = json::object();
    for (const auto& [p, v] : f.coeffs()) coeffs[p.to_string()] = v.to_string();
    return json{{"degree", f.degree()},
                {"basis", f.basis() == Basis::PowerSum ? "p" : "m"},
                {"coeffs", coeffs}};
}

SymFunD symfun_from_json(const json& j) {
    Basis basis = j.at("basis").get<std::string>() == "p" ? Basis::PowerSum : Basis::Monomial;
    SymFunD f(j.at("degree").get<int>(), basis);
    for (const auto& [key, value] : j.at("coeffs").items())
        f.set_coeff(Partition::parse(key), RatQT::parse(value.get<std::string>()));
    return f;
}

json macdonald_to_json(const MacdonaldTable& table) {
    json rows = json::object();
    for (size_t li = 0; li < table.parts.size(); ++li) {
        json row = json::object();
        for (size_t di = 0; di < table.parts.size(); ++di)
            if (!table.a[li][di].is_zero())
                row[table.parts[di].to_string()] = table.a[li][di].to_string();
        rows[table.parts[li].to_string()] = std::move(row);
    }
    return json{{"degree", table.degree}, {"rows", rows}};
}

std::string macdonald_to_csv(const MacdonaldTable& table) {
    std::ostringstream os;
    os << csv_quote("lambda\\delta");
    for (const auto& p : table.parts) os << "," << csv_quote(p.to_string());
    os << "\n";
    for (size_t li = 0; li < table.parts.size(); ++li) {
        os << csv_quote(table.parts[li].to_string());
        for (size_t di = 0; di < table.parts.size(); ++di)
            os << "," << csv_quote(table.a[li][di].to_string());
        os << "\n";
    }
    return os.str();
}

json mh_result_to_json(const hurwitz::MHResult& r) {
    json j{{"value", r.value.to_string()}, {"constraint_ok", r.constraint_ok}};
    if (r.constraint_ok)
        j["genus"] = r.genus;
    else
        j["genus"] = nullptr;
    return j;
}

json operator_to_json(const cutjoin::OperatorD& op, bool hbar_one) {
    json rows = json::object();
    for (size_t i = 0; i < op.parts.size(); ++i) {
        json row = json::object();
        for (size_t j2 = 0; j2 < op.parts.size(); ++j2) {
            const auto& entry = op.entries[i][j2];
            if (entry.is_zero()) continue;
            if (hbar_one)
                row[op.parts[j2].to_string()] = entry.at_hbar_one().to_string();
            else
                row[op.parts[j2].to_string()] = hlaurent_to_json(entry);
        }
        rows[op.parts[i].to_string()] = std::move(row);
    }
    return rows;
}

std::string operator_to_csv(const cutjoin::OperatorD& op, bool hbar_one) {
    std::ostringstream os;
    os << csv_quote("gamma\\gamma'");
    for (const auto& p : op.parts) os << "," << csv_quote(p.to_string());
    os << "\n";
    for (size_t i = 0; i < op.parts.size(); ++i) {
        os << csv_quote(op.parts[i].to_string());
        for (size_t j = 0; j < op.parts.size(); ++j) {
            const auto& entry = op.entries[i][j];
            std::string cell;
            if (hbar_one) {
                cell = entry.at_hbar_one().to_string();
            } else {
                bool first = true;
                for (const auto& [e, c] : entry.terms()) {
                    if (!first) cell += " ; ";
                    cell += "h^" + std::to_string(e) + " * " + c.to_string();
                    first = false;
                }
                if (first) cell = "0";
            }
            os << "," << csv_quote(cell);
        }
        os << "\n";
    }
    return os.str();
}

json wave_to_json(const wave::WaveSeries& s) {
    json deltas = json::array();
    for (const auto& p : s.deltas) deltas.push_back(p.to_string());
    json coeffs = json::object();
    for (const auto& [key, value] : s.coeffs) {
        std::string lkey;
        for (size_t i = 0; i < key.first.size(); ++i) {
            if (i) lkey += ",";
            lkey += std::to_string(key.first[i]);
        }
        std::string tkey;
        for (size_t i = 0; i < key.second.size(); ++i) {
            if (i) tkey += "|";
            tkey += s.parts[key.second[i]].to_string();
        }
        coeffs[lkey][tkey] = hlaurent_to_json(value);
    }
    return json{{"h", s.h},      {"d", s.d},           {"k", s.k},
                {"order", s.max_u_order}, {"deltas", deltas}, {"coeffs", coeffs}};
}

json structure_to_json(const algebra::StructureTable& table) {
    json out = json::object();
    for (size_t i = 0; i < table.parts.size(); ++i)
        for (size_t j = 0; j < table.parts.size(); ++j) {
            json cell = json::object();
            for (size_t k = 0; k < table.parts.size(); ++k)
                if (!table.C[i][j][k].is_zero())
                    cell[table.parts[k].to_string()] = table.C[i][j][k].to_string();
            out[table.parts[i].to_string() + " o " + table.parts[j].to_string()] = std::move(cell);
        }
    return json{{"degree", table.degree}, {"structure", out}};
}

std::string structure_to_csv(const algebra::StructureTable& table) {
    std::ostringstream os;
    os << csv_quote("delta1") << "," << csv_quote("delta2") << "," << csv_quote("delta3") << ","
       << csv_quote("value") << "\n";
    for (size_t i = 0; i < table.parts.size(); ++i)
        for (size_t j = 0; j < table.parts.size(); ++j)
            for (size_t k = 0; k < table.parts.size(); ++k)
                if (!table.C[i][j][k].is_zero())
                    os << csv_quote(table.parts[i].to_string()) << ","
                       << csv_quote(table.parts[j].to_string()) << ","
                       << csv_quote(table.parts[k].to_string()) << ","
                       << csv_quote(table.C[i][j][k].to_string()) << "\n";
    return os.str();
}

json eta_structure_to_json(const algebra::EtaStructure& es) {
    json out = json::object();
    for (size_t i = 0; i < es.parts.size(); ++i)
        for (size_t j = 0; j < es.parts.size(); ++j) {
            json cell = json::object();
            for (size_t k = 0; k < es.parts.size(); ++k)
                if (es.C[i][j][k] != 0)
                    cell[es.parts[k].to_string()] = es.C[i][j][k].get_str();
            out[es.parts[i].to_string() + " o " + es.parts[j].to_string()] = std::move(cell);
        }
    return json{{"degree", es.degree}, {"A", es.A}, {"B", es.B}, {"structure", out}};
}

namespace {

std::string cache_path(const std::string& dir, int degree) {
    return dir + "/macdonald_d" + std::to_string(degree) + ".json";
}

}  // namespace

std::shared_ptr<const MacdonaldTable> load_table_cache(const std::string& dir, int degree) {
    std::ifstream in(cache_path(dir, degree));
    if (!in) return nullptr;
    json j;
    try {
        in >> j;
        if (j.at("schema_version").get<int>() != kCacheSchemaVersion) return nullptr;
        if (j.at("degree").get<int>() != degree) return nullptr;
        auto table = std::make_shared<MacdonaldTable>();
        table->degree = degree;
        table->parts = enumerate_partitions(degree);
        size_t n = table->parts.size();
        for (size_t i = 0; i < n; ++i) table->index[table->parts[i]] = static_cast<int>(i);
        const json& a = j.at("a");
        const json& p = j.at("P");
        if (a.size() != n || p.size() != n) return nullptr;
        table->a.assign(n, std::vector<RatQT>(n));
        table->P_in_m.assign(n, std::vector<RatQT>(n));
        for (size_t i = 0; i < n; ++i) {
            if (a[i].size() != n || p[i].size() != n) return nullptr;
            for (size_t k = 0; k < n; ++k) {
                table->a[i][k] = RatQT::parse(a[i][k].get<std::string>());
                table->P_in_m[i][k] = RatQT::parse(p[i][k].get<std::string>());
            }
        }
        table->dim.resize(n);
        table->j_values.clear();
        for (size_t i = 0; i < n; ++i) {
            table->dim[i] = table->a[i][n - 1];
            if (degree > 0 && table->dim[i].is_zero()) return nullptr;
            table->j_values.push_back(j_norm(table->parts[i]));
        }
        return table;
    } catch (const std::exception&) {
        return nullptr;
    }
}

void save_table_cache(const std::string& dir, const MacdonaldTable& table) {
    std::filesystem::create_directories(dir);
    size_t n = table.parts.size();
    json a = json::array(), p = json::array();
    for (size_t i = 0; i < n; ++i) {
        json ra = json::array(), rp = json::array();
        for (size_t k = 0; k < n; ++k) {
            ra.push_back(table.a[i][k].to_string());
            rp.push_back(table.P_in_m[i][k].to_string());
        }
        a.push_back(std::move(ra));
        p.push_back(std::move(rp));
    }
    json j{{"schema_version", kCacheSchemaVersion},
           {"degree", table.degree},
           {"a", a},
           {"P", p}};
    std::string path = cache_path(dir, table.degree);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);  // single-writer atomic replace
}

void enable_disk_cache(const std::string& dir) {
    if (dir.empty()) {
        set_table_io(nullptr, nullptr);
        return;
    }
    set_table_io([dir](int degree) { return load_table_cache(dir, degree); },
                 [dir](const MacdonaldTable& table) { save_table_cache(dir, table); });
}

}  // namespace io
}  // namespace mh
