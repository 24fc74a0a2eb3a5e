// Command-line front end: exact Macdonald tables, Macdonald-Hurwitz numbers,
// cut-and-join operators, wave-function series, the class-algebra tables and
// the identity-verification suites, with JSON/CSV export and an on-disk table
// cache.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "mh/json_io.hpp"
#include "mh/verify.hpp"

using namespace mh;
using nlohmann::json;

namespace {

std::vector<Partition> parse_profiles(const std::string& s) {
    std::vector<Partition> out;
    if (s.empty()) return out;
    size_t start = 0;
    while (true) {
        size_t bar = s.find('|', start);
        std::string piece = s.substr(start, bar == std::string::npos ? bar : bar - start);
        out.push_back(Partition::parse(piece));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return out;
}

std::pair<int, int> parse_eta(const std::string& s) {
    size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--eta expects \"A,B\"");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

void emit(const std::string& text, const std::string& file) {
    if (file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(file);
        if (!out) throw std::runtime_error("cannot open output file " + file);
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
    }
}

void check_budget(int d, int max_degree) {
    if (d > max_degree)
        throw std::invalid_argument("degree " + std::to_string(d) + " is over the budget " +
                                    std::to_string(max_degree) + " (raise --max-degree)");
}

std::string pretty_macdonald(const MacdonaldTable& table) {
    std::ostringstream os;
    for (size_t li = 0; li < table.parts.size(); ++li) {
        os << "J_(" << table.parts[li].to_string() << ") =";
        bool first = true;
        for (size_t di = 0; di < table.parts.size(); ++di) {
            if (table.a[li][di].is_zero()) continue;
            os << (first ? " " : " + ") << table.a[li][di].to_string() << " p_("
               << table.parts[di].to_string() << ")";
            first = false;
        }
        os << "\n";
        os << "  j_(" << table.parts[li].to_string()
           << ") = " << table.j_values[li].to_string() << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Macdonald / Macdonald-Hurwitz computer algebra"};
    app.require_subcommand(1);

    int max_degree = 8;
    std::string out_format = "json";
    std::string cache_dir;
    int jobs = 1;
    unsigned seed = 20221111;
    std::string out_file;
    app.add_option("--max-degree", max_degree, "degree budget guard");
    app.add_option("--out", out_format, "output format: json, csv or pretty");
    app.add_option("--cache-dir", cache_dir, "directory for the Macdonald table cache");
    app.add_option("--jobs", jobs, "worker threads for verification sweeps");
    app.add_option("--seed", seed, "seed for randomized property sweeps");
    app.add_option("--file", out_file, "write output to a file instead of stdout");

    // macdonald / export
    int mac_d = 2;
    auto* mac = app.add_subcommand("macdonald", "integral Macdonald table for one degree");
    mac->add_option("--d", mac_d, "degree")->required();
    auto* exp_cmd = app.add_subcommand("export", "alias of macdonald with file output");
    int exp_d = 2;
    exp_cmd->add_option("--d", exp_d, "degree")->required();

    // coeffs
    int co_d = 2;
    std::string co_lambda, co_delta;
    auto* coe = app.add_subcommand("coeffs", "coefficients a_lambda(Delta) and dim");
    coe->add_option("--d", co_d, "degree")->required();
    coe->add_option("--lambda", co_lambda, "row partition (all rows when omitted)");
    coe->add_option("--delta", co_delta, "column partition (all columns when omitted)");

    // mh
    int mh_h = 0, mh_d = 1;
    std::string mh_profiles;
    bool mh_nonneg = false, mh_disc = false;
    long mh_genus = 0;
    auto* mhc = app.add_subcommand("mh", "Macdonald-Hurwitz numbers");
    mhc->add_option("--h", mh_h, "target genus")->required();
    mhc->add_option("--d", mh_d, "degree")->required();
    mhc->add_option("--profiles", mh_profiles, "ramification profiles, e.g. \"2,1|3|1,1,1\"");
    mhc->add_flag("--require-nonneg-genus", mh_nonneg, "zero out negative source genus");
    mhc->add_flag("--disconnected", mh_disc, "disconnected assembly (needs --genus)");
    mhc->add_option("--genus", mh_genus, "total genus for --disconnected");

    // cutjoin
    int cj_d = 2;
    std::string cj_delta;
    bool cj_hbar_one = false;
    auto* cjc = app.add_subcommand("cutjoin", "genus-expanded cut-and-join operator matrix");
    cjc->add_option("--d", cj_d, "degree")->required();
    cjc->add_option("--delta", cj_delta, "operator profile partition")->required();
    cjc->add_flag("--hbar-one", cj_hbar_one, "evaluate entries at hbar = 1");

    // wavefn
    int wv_h = 0, wv_d = 1, wv_k = 0, wv_order = 0;
    std::string wv_deltas;
    auto* wvc = app.add_subcommand("wavefn", "truncated generating wave function");
    wvc->add_option("--h", wv_h, "target genus")->required();
    wvc->add_option("--d", wv_d, "degree")->required();
    wvc->add_option("--deltas", wv_deltas, "u-profiles, e.g. \"2|1,1\"");
    wvc->add_option("--k", wv_k, "number of spectator variable sets");
    wvc->add_option("--order", wv_order, "u truncation order");

    // algebra
    int al_d = 2;
    bool al_structure = false, al_idem = false, al_verify = false;
    std::string al_eta;
    auto* alc = app.add_subcommand("algebra", "center of the group algebra with the o_{q,t} product");
    alc->add_option("--d", al_d, "degree")->required();
    alc->add_flag("--structure", al_structure, "emit structure constants");
    alc->add_flag("--idempotents", al_idem, "emit idempotent basis");
    alc->add_flag("--verify", al_verify, "run the algebra verification suite");
    alc->add_option("--eta", al_eta, "specialize along eta(A|B), format \"A,B\"");

    // jack
    int jk_d = 2;
    std::string jk_eta = "1,1";
    auto* jkc = app.add_subcommand("jack", "eta(A|B) limits: c, c', j and J coefficients");
    jkc->add_option("--d", jk_d, "degree")->required();
    jkc->add_option("--eta", jk_eta, "path exponents \"A,B\"")->required();

    // verify
    std::string vf_suite = "all";
    auto* vfc = app.add_subcommand("verify", "run identity-verification suites");
    vfc->add_option("--suite", vf_suite,
                    "one of: qtfield, macdonald, hurwitz, cutjoin, wavefn, algebra, jack, all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!cache_dir.empty()) io::enable_disk_cache(cache_dir);
        verify::set_jobs(jobs);

        if (mac->parsed() || exp_cmd->parsed()) {
            int d = mac->parsed() ? mac_d : exp_d;
            check_budget(d, max_degree);
            auto table = macdonald_table(d);
            if (out_format == "csv")
                emit(io::macdonald_to_csv(*table), out_file);
            else if (out_format == "pretty")
                emit(pretty_macdonald(*table), out_file);
            else
                emit(io::macdonald_to_json(*table).dump(2), out_file);
        } else if (coe->parsed()) {
            check_budget(co_d, max_degree);
            auto table = macdonald_table(co_d);
            json j;
            if (!co_lambda.empty() && !co_delta.empty()) {
                Partition lam = Partition::parse(co_lambda);
                Partition del = Partition::parse(co_delta);
                j = json{{"lambda", lam.to_string()},
                         {"delta", del.to_string()},
                         {"a", coeff_a(lam, del).to_string()},
                         {"dim", dim_qt(lam).to_string()}};
            } else if (!co_lambda.empty()) {
                Partition lam = Partition::parse(co_lambda);
                j = io::symfun_to_json(integral_J(lam));
            } else {
                j = io::macdonald_to_json(*table);
            }
            emit(j.dump(2), out_file);
        } else if (mhc->parsed()) {
            check_budget(mh_d, max_degree);
            auto profiles = parse_profiles(mh_profiles);
            if (mh_disc) {
                RatQT v = hurwitz::mh_disconnected(mh_h, mh_d, profiles, mh_genus);
                emit(json{{"value", v.to_string()}, {"genus", mh_genus}, {"disconnected", true}}
                         .dump(2),
                     out_file);
            } else {
                auto r = hurwitz::mh(mh_h, mh_d, profiles, mh_nonneg);
                emit(io::mh_result_to_json(r).dump(2), out_file);
            }
        } else if (cjc->parsed()) {
            check_budget(cj_d, max_degree);
            auto op = cutjoin::cut_and_join(Partition::parse(cj_delta), cj_d);
            if (out_format == "csv")
                emit(io::operator_to_csv(*op, cj_hbar_one), out_file);
            else
                emit(io::operator_to_json(*op, cj_hbar_one).dump(2), out_file);
        } else if (wvc->parsed()) {
            check_budget(wv_d, max_degree);
            wave::WaveSeries s = wave::phi(wv_h, wv_d, parse_profiles(wv_deltas), wv_k, wv_order);
            emit(io::wave_to_json(s).dump(2), out_file);
        } else if (alc->parsed()) {
            check_budget(al_d, max_degree);
            if (al_verify) {
                auto results = verify::run_suite("algebra", al_d, seed);
                json rep = json::array();
                bool all_ok = true;
                for (const auto& r : results) {
                    rep.push_back({{"name", r.name}, {"ok", r.ok}, {"cases", r.cases},
                                   {"detail", r.detail}});
                    all_ok = all_ok && r.ok;
                }
                emit(rep.dump(2), out_file);
                return all_ok ? 0 : 1;
            }
            json j;
            if (!al_eta.empty()) {
                auto [A, B] = parse_eta(al_eta);
                auto es = algebra::eta_structure(al_d, A, B);
                j = io::eta_structure_to_json(es);
                if (al_idem) {
                    json idem = json::object();
                    for (const auto& lam : enumerate_partitions(al_d)) {
                        json row = json::array();
                        for (const auto& c : algebra::eta_idempotent(lam, A, B))
                            row.push_back(c.get_str());
                        idem[lam.to_string()] = std::move(row);
                    }
                    j["idempotents"] = std::move(idem);
                }
                emit(j.dump(2), out_file);
            } else if (al_idem) {
                json idem = json::object();
                for (const auto& lam : enumerate_partitions(al_d)) {
                    json row = json::object();
                    auto eps = algebra::idempotent(lam);
                    for (const auto& [p, v] : eps.coeffs()) row[p.to_string()] = v.to_string();
                    idem[lam.to_string()] = std::move(row);
                }
                emit(json{{"degree", al_d}, {"idempotents", idem}}.dump(2), out_file);
            } else {
                auto table = algebra::structure_table(al_d);
                (void)al_structure;  // structure output is the default
                if (out_format == "csv")
                    emit(io::structure_to_csv(*table), out_file);
                else
                    emit(io::structure_to_json(*table).dump(2), out_file);
            }
        } else if (jkc->parsed()) {
            check_budget(jk_d, max_degree);
            auto [A, B] = parse_eta(jk_eta);
            json limits = json::object(), cj = json::object();
            for (const auto& lam : enumerate_partitions(jk_d)) {
                cj[lam.to_string()] = {{"c", c_AB(lam, A, B).get_str()},
                                       {"cprime", c_prime_AB(lam, A, B).get_str()},
                                       {"j", j_AB(lam, A, B).get_str()}};
                json row = json::object();
                for (const auto& delta : enumerate_partitions(jk_d))
                    row[delta.to_string()] = jack_J_coeff(lam, delta, A, B).get_str();
                limits[lam.to_string()] = std::move(row);
            }
            emit(json{{"degree", jk_d}, {"A", A}, {"B", B},
                      {"cells", cj}, {"J_coefficients", limits}}
                     .dump(2),
                 out_file);
        } else if (vfc->parsed()) {
            auto results = verify::run_suite(vf_suite, max_degree, seed);
            json rep = json::array();
            bool all_ok = true;
            for (const auto& r : results) {
                rep.push_back({{"name", r.name}, {"ok", r.ok}, {"cases", r.cases},
                               {"detail", r.detail}});
                all_ok = all_ok && r.ok;
                std::cerr << (r.ok ? "PASS " : "FAIL ") << r.name << " (" << r.cases
                          << " checks)" << (r.detail.empty() ? "" : " - " + r.detail) << "\n";
            }
            emit(rep.dump(2), out_file);
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
