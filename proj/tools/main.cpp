// Command line front end. Talks to the library through the C interface only
// and renders the returned JSON either verbatim or as plain text tables.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "vanbrauer/vanbrauer.h"

namespace {

using Json = nlohmann::ordered_json;

// 0 fine, 1 a verified identity failed, 2 the request itself was bad
int exit_for(vbc_status st) {
    switch (st) {
        case VBC_OK:
            return 0;
        case VBC_ERROR_VERIFICATION:
        case VBC_ERROR_INTERNAL:
            return 1;
        default:
            return 2;
    }
}

int report_error(vbc_status st) {
    std::cerr << "error: " << vbc_last_error() << "\n";
    return exit_for(st);
}

std::string take(char* s) {
    std::string out = s == nullptr ? "" : s;
    vbc_string_free(s);
    return out;
}

std::string element_str(const Json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string mat_str(const Json& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t k = 0; k < m[i].size(); ++k) {
            if (k) out += ", ";
            out += element_str(m[i][k]);
        }
        out += "]";
    }
    return out + "]";
}

std::string list_str(const Json& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        out += element_str(a[i]);
    }
    return out + "]";
}

void kv(const std::string& key, const std::string& val) {
    std::cout << "  " << std::left << std::setw(20) << key << val << "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_case_table(const Json& j) {
    std::cout << "case (" << j["tau"] << ", " << j["n"] << ")\n";
    kv("pic gram", mat_str(j["pic_gram"]));
    kv("det pic", element_str(j["det_pic"]));
    kv("det M", element_str(j["det_M"]));
    kv("brauer kind", j["brauer_kind"].get<std::string>());
    kv("clifford relation", j["clifford_relation"].get<std::string>());
    kv("admissible", yes_no(j["admissible"].get<bool>()));
}

int cmd_classify(int tau, long n, bool as_json) {
    char* out = nullptr;
    vbc_status st = vbc_case_report_json(tau, n, &out);
    if (st != VBC_OK) return report_error(st);
    std::string payload = take(out);
    if (as_json) {
        std::cout << payload << "\n";
        return 0;
    }
    print_case_table(Json::parse(payload));
    return 0;
}

int cmd_verify(long n_max, bool inject, bool as_json) {
    char* out = nullptr;
    vbc_status st = vbc_verify_theorem_json(n_max, inject ? 1 : 0, &out);
    if (st != VBC_OK) return report_error(st);
    std::string payload = take(out);
    Json j = Json::parse(payload);
    bool ok = j["ok"].get<bool>();
    if (as_json) {
        std::cout << payload << "\n";
    } else {
        std::cout << "cases    " << j["cases"] << "\n";
        std::cout << "checks   " << j["checks"] << "\n";
        std::cout << "failures " << j["failures"].size() << "\n";
        for (const Json& f : j["failures"])
            std::cout << "  (" << f["tau"] << ", " << f["n"] << "): "
                      << f["what"].get<std::string>() << "\n";
        std::cout << (ok ? "ok" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_glue(bool as_json) {
    char* out = nullptr;
    vbc_status st = vbc_glue_audit_json(&out);
    if (st != VBC_OK) return report_error(st);
    std::string payload = take(out);
    if (as_json) {
        std::cout << payload << "\n";
        return 0;
    }
    Json j = Json::parse(payload);
    std::cout << "glue audit\n";
    kv("g8 dual norm", element_str(j["g8_norm"]));
    kv("kernel dual norm", element_str(j["kernel_dual_norm"]));
    kv("glue vector norm", element_str(j["sum_norm"]));
    kv("det L", element_str(j["det_l"]));
    std::ostringstream sig;
    sig << "(" << j["signature"]["positives"] << ", " << j["signature"]["negatives"] << ")";
    kv("signature", sig.str());
    kv("odd", yes_no(j["odd"].get<bool>()));
    kv("five block", yes_no(j["five_block_ok"].get<bool>()));
    kv("sylvester", yes_no(j["sylvester_ok"].get<bool>()));
    kv("h3-perp even", yes_no(j["h3_perp_even"].get<bool>()));
    kv("K8 discriminant", list_str(j["k8_disc"]));
    kv("kernel discriminant", list_str(j["kernel_disc"]));
    kv("L discriminant", list_str(j["l_disc"]));
    return 0;
}

int cmd_lookup(const std::string& c, bool as_json) {
    char* out = nullptr;
    vbc_status st = vbc_inverse_lookup_json(c.c_str(), &out);
    if (st != VBC_OK) return report_error(st);
    std::string payload = take(out);
    if (as_json) {
        std::cout << payload << "\n";
        return 0;
    }
    Json j = Json::parse(payload);
    std::cout << "c " << element_str(j["c"]) << "\n";
    if (j["cases"].empty()) {
        std::cout << "no cases\n";
        return 0;
    }
    for (const Json& e : j["cases"])
        std::cout << "(" << e["tau"] << ", " << e["n"] << ")\n";
    return 0;
}

int cmd_admissible_one(int tau, long n, bool as_json) {
    int flag = 0;
    vbc_status st = vbc_admissible(tau, n, &flag);
    if (st != VBC_OK) return report_error(st);
    if (as_json) {
        Json j;
        j["tau"] = tau;
        j["n"] = n;
        j["admissible"] = flag != 0;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << yes_no(flag != 0) << "\n";
    }
    return 0;
}

int cmd_admissible_table(long n_max, bool as_json) {
    char* out = nullptr;
    vbc_status st = vbc_admissible_table_json(n_max, &out);
    if (st != VBC_OK) return report_error(st);
    std::string payload = take(out);
    if (as_json) {
        std::cout << payload << "\n";
        return 0;
    }
    Json j = Json::parse(payload);
    long lo = j["n_min"].get<long>();
    long hi = j["n_max"].get<long>();
    std::cout << std::left << std::setw(8) << "tau\\n";
    for (long n = lo; n <= hi; ++n) std::cout << std::left << std::setw(10) << n;
    std::cout << "\n";
    std::size_t idx = 0;
    const Json& entries = j["entries"];
    for (int tau = 0; tau <= 4; ++tau) {
        std::cout << std::left << std::setw(8) << tau;
        for (long n = lo; n <= hi; ++n, ++idx) {
            const std::string s = entries[idx]["status"].get<std::string>();
            std::cout << std::left << std::setw(10) << (s == "excluded" ? "-" : s);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_abbv(bool as_json) {
    char* out = nullptr;
    vbc_status st = vbc_abbv_check_json(&out);
    if (st != VBC_OK) return report_error(st);
    std::string payload = take(out);
    Json j = Json::parse(payload);
    bool ok = j["ok"].get<bool>();
    if (as_json) {
        std::cout << payload << "\n";
    } else {
        std::cout << "rank-2 example\n";
        kv("start gram", mat_str(j["start_gram"]));
        kv("normalized gram", mat_str(j["normalized_gram"]));
        std::string cases;
        for (const Json& e : j["lookup"]) {
            if (!cases.empty()) cases += " ";
            cases += "(" + e["tau"].dump() + ", " + e["n"].dump() + ")";
        }
        kv("lookup", cases);
        print_case_table(j["case"]);
        std::cout << (ok ? "ok" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of vanishing Brauer classes on degree-2 K3 surfaces"};
    app.require_subcommand(1);

    std::string format = "table";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
    };

    int tau = 0;
    long n = 0;
    long n_max = 50;
    bool inject = false;
    std::string c;
    long table_max = 0;

    CLI::App* classify = app.add_subcommand("classify", "invariants of one case (tau, n)");
    classify->add_option("--tau", tau, "0..4")->required();
    classify->add_option("--n", n, "degree parameter, at least 2")->required();
    add_format(classify);

    CLI::App* verify =
        app.add_subcommand("verify-theorem", "re-derive every identity for n up to n-max");
    verify->add_option("--n-max", n_max, "upper bound for n")->capture_default_str();
    verify->add_flag("--inject-fault", inject,
                     "perturb one expected value (self test of the harness)");
    add_format(verify);

    CLI::App* glue = app.add_subcommand("glue-check", "audit the rank-23 overlattice");
    add_format(glue);

    CLI::App* lookup =
        app.add_subcommand("lookup", "cases with normalized Picard Gram [[2,0],[0,2c]]");
    lookup->add_option("--c", c, "negative integer, decimal")->required();
    add_format(lookup);

    CLI::App* adm = app.add_subcommand("admissible", "admissibility of a case, or a grid");
    CLI::Option* adm_tau = adm->add_option("--tau", tau, "0..4");
    CLI::Option* adm_n = adm->add_option("--n", n, "degree parameter, at least 2");
    CLI::Option* adm_table =
        adm->add_option("--table", table_max, "print the grid for 2 <= n <= this bound");
    adm_tau->needs(adm_n);
    adm_n->needs(adm_tau);
    adm_table->excludes(adm_tau);
    adm_table->excludes(adm_n);
    add_format(adm);

    CLI::App* abbv = app.add_subcommand("abbv-check", "worked rank-2 example");
    add_format(abbv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool as_json = format == "json";

    if (app.got_subcommand(classify)) return cmd_classify(tau, n, as_json);
    if (app.got_subcommand(verify)) return cmd_verify(n_max, inject, as_json);
    if (app.got_subcommand(glue)) return cmd_glue(as_json);
    if (app.got_subcommand(lookup)) return cmd_lookup(c, as_json);
    if (app.got_subcommand(adm)) {
        if (adm_table->count() > 0) return cmd_admissible_table(table_max, as_json);
        if (adm_tau->count() > 0) return cmd_admissible_one(tau, n, as_json);
        std::cerr << "error: admissible needs either --tau with --n, or --table\n";
        return 2;
    }
    if (app.got_subcommand(abbv)) return cmd_abbv(as_json);

    return 2;
}
