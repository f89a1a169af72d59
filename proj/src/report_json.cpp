#include "report_json.hpp"

#include <stdexcept>

namespace vbc {

namespace {

const char* status_name(int tau, long n) {
    if (!valid_case(tau, n)) return "excluded";
    return admissible(tau, n) ? "yes" : "no";
}

}  // namespace

Json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        Int x;
        if (mpz_set_str(x.get_mpz_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("not a decimal integer: " + s);
        return x;
    }
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json rat_to_json(const Rat& r) { return Json(r.get_str()); }

Json intmat_to_json(const IntMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMat intmat_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    const std::size_t r = j.size();
    std::size_t c = 0;
    if (r > 0) {
        if (!j[0].is_array()) throw std::invalid_argument("matrix rows must be arrays");
        c = j[0].size();
    }
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!j[i].is_array() || j[i].size() != c)
            throw std::invalid_argument("matrix rows must have equal length");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

Json lattice_to_json(const Lattice& l) {
    Json j;
    j["rank"] = l.rank();
    j["gram"] = intmat_to_json(l.gram());
    return j;
}

Lattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("gram"))
        throw std::invalid_argument("lattice object needs rank and gram");
    IntMat g = intmat_from_json(j["gram"]);
    if (!j["rank"].is_number_integer() ||
        j["rank"].get<std::int64_t>() != static_cast<std::int64_t>(g.rows()))
        throw std::invalid_argument("rank does not match the gram matrix");
    return Lattice(g);
}

Json signature_to_json(const Signature& s) {
    Json j;
    j["positives"] = s.positives;
    j["negatives"] = s.negatives;
    return j;
}

Json discriminant_to_json(const DiscriminantGroup& d) {
    Json j = Json::array();
    for (const Int& f : d.invariant_factors) j.push_back(int_to_json(f));
    return j;
}

Json case_report_to_json(const CaseReport& r) {
    Json j;
    j["tau"] = r.tau;
    j["n"] = r.n;
    j["pic_gram"] = intmat_to_json(r.pic_gram);
    j["det_pic"] = int_to_json(r.det_pic);
    j["det_M"] = int_to_json(r.det_m);
    j["brauer_kind"] = to_string(r.brauer.kind);
    j["clifford_relation"] = to_string(r.clifford);
    j["admissible"] = r.admissible;
    return j;
}

Json glue_audit_to_json(const GlueAudit& a) {
    Json j;
    j["g8_norm"] = rat_to_json(a.g8_norm);
    j["kernel_dual_norm"] = rat_to_json(a.kernel_dual_norm);
    j["sum_norm"] = rat_to_json(a.sum_norm);
    j["det_l"] = int_to_json(a.det_l);
    j["signature"] = signature_to_json(a.sig);
    j["odd"] = a.odd;
    j["five_block_ok"] = a.five_block_ok;
    j["sylvester_ok"] = a.sylvester_ok;
    j["h3_perp_even"] = a.h3_perp_even;
    j["k8_disc"] = discriminant_to_json(a.k8_disc);
    j["kernel_disc"] = discriminant_to_json(a.kernel_disc);
    j["l_disc"] = discriminant_to_json(a.l_disc);
    return j;
}

Json theorem_run_to_json(const TheoremRun& r) {
    Json j;
    j["cases"] = r.cases;
    j["checks"] = r.checks;
    Json fails = Json::array();
    for (const TheoremFailure& f : r.failures) {
        Json e;
        e["tau"] = f.tau;
        e["n"] = f.n;
        e["what"] = f.what;
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    j["ok"] = r.ok();
    return j;
}

Json inverse_lookup_to_json(const Int& c) {
    Json j;
    j["c"] = int_to_json(c);
    Json cases = Json::array();
    for (auto [tau, n] : inverse_lookup(c)) {
        Json e;
        e["tau"] = tau;
        e["n"] = n;
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    return j;
}

Json admissible_table_to_json(long n_max) {
    if (n_max < 2) throw std::invalid_argument("table needs n_max >= 2");
    Json j;
    j["n_min"] = 2;
    j["n_max"] = n_max;
    Json entries = Json::array();
    for (int tau = 0; tau <= 4; ++tau)
        for (long n = 2; n <= n_max; ++n) {
            Json e;
            e["tau"] = tau;
            e["n"] = n;
            e["status"] = status_name(tau, n);
            entries.push_back(std::move(e));
        }
    j["entries"] = std::move(entries);
    return j;
}

Json abbv_to_json() {
    IntMat start{{2, 2}, {2, -2}};
    Json j;
    j["start_gram"] = intmat_to_json(start);
    j["normalized_gram"] = intmat_to_json(normalize_pic_gram(start));
    Json cases = Json::array();
    for (auto [tau, n] : inverse_lookup(Int(-2))) {
        Json e;
        e["tau"] = tau;
        e["n"] = n;
        cases.push_back(std::move(e));
    }
    j["lookup"] = std::move(cases);
    j["case"] = case_report_to_json(case_report(4, 5));
    j["ok"] = abbv_example_check();
    return j;
}

}  // namespace vbc
