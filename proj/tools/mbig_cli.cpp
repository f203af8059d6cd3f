#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mbig.h"

namespace {

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { mbig_string_free(s); }
};

std::uint64_t default_seed() {
    const char* env = std::getenv("MBIG_SEED");
    return env ? std::strtoull(env, nullptr, 10) : 0;
}

bool write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    return bool(out);
}

int fail_with(mbig_status st) {
    std::cerr << "error: " << mbig_status_name(st) << "\n";
    if (st == MBIG_ERR_PARSE || st == MBIG_ERR_BAD_ARGUMENT || st == MBIG_ERR_NOT_PRIME)
        return 64;
    if (st == MBIG_ERR_SEARCH_SPACE_TOO_LARGE || st == MBIG_ERR_GROUP_TOO_LARGE) return 3;
    return 70;
}

std::vector<std::uint32_t> parse_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::uint32_t(std::stoul(item)));
    return out;
}

bool parse_range(const std::string& s, std::uint32_t& lo, std::uint32_t& hi) {
    auto pos = s.find(':');
    if (pos == std::string::npos) return false;
    lo = std::uint32_t(std::stoul(s.substr(0, pos)));
    hi = std::uint32_t(std::stoul(s.substr(pos + 1)));
    return lo <= hi;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct CorpusCell {
    std::uint32_t l, k, m;
    std::uint64_t order = 0;
    int verdict = 2;
    std::string status = "OK";
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-bigness certification for explicit finite matrix groups"};
    app.require_subcommand(1);

    mbig_caps caps{0, 0, 0, 0};
    std::uint64_t seed = default_seed();
    std::string out_path;
    app.add_option("--seed", seed, "PRNG seed (default: MBIG_SEED env var or 0)");
    app.add_option("--cap-elements", caps.element_cap, "group enumeration cap");
    app.add_option("--cap-submodules", caps.submodule_cap, "irreducible-submodule cap");
    app.add_option("--cap-cocycle", caps.cocycle_budget, "cocycle system budget");
    app.add_option("--cap-chop", caps.chop_budget, "meataxe attempt budget");
    app.add_option("--out", out_path, "output file (default: stdout)");

    // check
    auto* check = app.add_subcommand("check", "decide m-bigness of a group from a JSON file");
    std::string group_path;
    std::uint32_t m = 1;
    check->add_option("--group", group_path, "group spec JSON file")->required();
    check->add_option("--m", m, "the exponent m")->required();

    // torus
    auto* torus = app.add_subcommand("torus", "search a split torus for an m-regular element");
    std::string type = "A1";
    std::uint32_t q = 0, e = 1, norm = 1;
    std::uint64_t scan_cap = 0;
    torus->add_option("--type", type, "root datum type (A1, A2, B2, A1xA1, ...)")->required();
    torus->add_option("--q", q, "field characteristic p (with --e for p^e)")->required();
    torus->add_option("--e", e, "field extension degree");
    torus->add_option("--m", m, "the exponent m")->required();
    torus->add_option("--norm", norm, "weight norm bound n")->required();
    torus->add_option("--cap-scan", scan_cap, "torus scan cap");

    // audit
    auto* audit = app.add_subcommand("audit", "exact covering statistics for the torus search");
    audit->add_option("--type", type, "root datum type")->required();
    audit->add_option("--q", q, "field characteristic p (with --e for p^e)")->required();
    audit->add_option("--e", e, "field extension degree");
    audit->add_option("--m", m, "the exponent m")->required();
    audit->add_option("--norm", norm, "weight norm bound n")->required();
    audit->add_option("--cap-scan", scan_cap, "torus scan cap");

    // corpus
    auto* corpus = app.add_subcommand("corpus", "verdict table for SL2(F_l) symmetric powers");
    std::string l_range = "5:13", sym_powers = "1", m_list = "1";
    unsigned workers = 1;
    bool strict = false;
    corpus->add_option("--l-range", l_range, "inclusive prime range LO:HI");
    corpus->add_option("--sym-powers", sym_powers, "comma-separated k list");
    corpus->add_option("--m-list", m_list, "comma-separated m list");
    corpus->add_option("--workers", workers, "parallel cell workers");
    corpus->add_flag("--strict", strict, "fail on any INDETERMINATE cell");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) {
        std::ifstream in(group_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read " << group_path << "\n";
            return 64;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        mbig_group* g = nullptr;
        mbig_status st = mbig_group_parse(buf.str().c_str(), &caps, &g);
        if (st != MBIG_OK) return fail_with(st);
        int verdict = 2;
        OwnedString cert;
        st = mbig_check(g, m, seed, &caps, &verdict, &cert.s);
        mbig_group_free(g);
        if (st != MBIG_OK) return fail_with(st);
        if (!write_output(out_path, cert.s)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 70;
        }
        return verdict;
    }

    if (torus->parsed()) {
        int found = 0;
        OwnedString elem;
        mbig_status st = mbig_torus_find(type.c_str(), q, e, m, norm, scan_cap, &found, &elem.s);
        if (st != MBIG_OK) return fail_with(st);
        write_output(out_path, found ? std::string(elem.s) : "none\n");
        return found ? 0 : 1;
    }

    if (audit->parsed()) {
        OwnedString report;
        mbig_status st = mbig_torus_audit(type.c_str(), q, e, m, norm, scan_cap, &report.s);
        if (st != MBIG_OK) return fail_with(st);
        write_output(out_path, report.s);
        return 0;
    }

    // corpus
    std::uint32_t lo = 0, hi = 0;
    if (!parse_range(l_range, lo, hi)) {
        std::cerr << "error: bad --l-range\n";
        return 64;
    }
    std::vector<CorpusCell> cells;
    for (std::uint32_t l = lo; l <= hi; ++l) {
        if (!is_prime(l)) continue;
        for (std::uint32_t k : parse_list(sym_powers))
            for (std::uint32_t mm : parse_list(m_list)) cells.push_back({l, k, mm});
    }
    std::mutex mx;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lk(mx);
                if (next >= cells.size()) return;
                i = next++;
            }
            CorpusCell& c = cells[i];
            mbig_group* g = nullptr;
            mbig_status st = mbig_group_sl2(c.l, c.k, &caps, &g);
            if (st != MBIG_OK) {
                c.status = mbig_status_name(st);
                continue;
            }
            c.order = mbig_group_order(g);
            st = mbig_check(g, c.m, seed, &caps, &c.verdict, nullptr);
            if (st != MBIG_OK) c.status = mbig_status_name(st);
            mbig_group_free(g);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // cells were generated in (l, k, m) order already
    static const char* names[] = {"BIG", "NOT_BIG", "INDETERMINATE"};
    std::ostringstream csv;
    csv << "l,k,m,order,verdict,status\n";
    bool any_indeterminate = false;
    for (const auto& c : cells) {
        const char* v = c.status == "OK" ? names[c.verdict] : "INDETERMINATE";
        if (std::string(v) == "INDETERMINATE") any_indeterminate = true;
        csv << c.l << ',' << c.k << ',' << c.m << ',' << c.order << ',' << v << ',' << c.status
            << "\n";
    }

    nlohmann::ordered_json j;
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : cells)
        j["cells"].push_back({{"l", c.l},
                              {"k", c.k},
                              {"m", c.m},
                              {"order", c.order},
                              {"verdict", c.status == "OK" ? names[c.verdict] : "INDETERMINATE"},
                              {"status", c.status}});
    // least l from which a (k, m) column is BIG for every scanned larger l
    j["thresholds"] = nlohmann::ordered_json::array();
    for (std::uint32_t k : parse_list(sym_powers))
        for (std::uint32_t mm : parse_list(m_list)) {
            std::int64_t least = -1;
            for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
                if (it->k != k || it->m != mm) continue;
                if (it->status == "OK" && it->verdict == 0)
                    least = it->l;
                else
                    break;
            }
            nlohmann::ordered_json row{{"k", k}, {"m", mm}};
            row["least_stable_big_l"] = least < 0 ? nlohmann::ordered_json() : nlohmann::ordered_json(least);
            j["thresholds"].push_back(std::move(row));
        }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        if (!write_output(out_path + ".csv", csv.str()) ||
            !write_output(out_path + ".json", j.dump(2) + "\n")) {
            std::cerr << "error: cannot write outputs\n";
            return 70;
        }
    }
    if (strict && any_indeterminate) return 2;
    return 0;
}
