#include "wrz/report.hpp"

#include <sstream>

namespace wrz {

using nlohmann::json;

nlohmann::json report_to_json(const VerificationReport& rep) {
    json j;
    j["family"] = rep.family.name();
    j["partition"] = rep.partition.parts();
    j["k"] = rep.k.indices();
    j["weight"] = rep.partition.weight();
    j["d_lambda"] = rep.d;
    j["symmetric"] = rep.symmetric;

    json pred;
    pred["total"] = rep.predicted_total;
    if (rep.predicted_sym) {
        pred["origin_multiplicity"] = rep.predicted_sym->origin_multiplicity;
        pred["positive"] = rep.predicted_sym->positive_count;
        pred["negative"] = rep.predicted_sym->negative_count;
    }
    j["predicted"] = pred;

    json exact;
    exact["total"] = rep.exact_count;
    exact["origin_multiplicity"] = rep.exact_origin_mult;
    if (rep.exact_positive) exact["positive"] = *rep.exact_positive;
    if (rep.exact_negative) exact["negative"] = *rep.exact_negative;
    json mults = json::array();
    for (const auto& rm : rep.root_multiplicities)
        mults.push_back({rm.multiplicity, rm.distinct_roots});
    exact["root_multiplicities"] = mults;
    exact["all_simple_except_origin"] = rep.all_simple_except_origin;
    j["exact"] = exact;

    if (rep.family.kind() == FamilyKind::FromMoments) j["conjecture_probe"] = true;
    j["degenerate"] = rep.degenerate;
    json wits = json::array();
    for (const auto& w : rep.witnesses) {
        json e;
        e["pair"] = {w.probe_m, w.probe_n};
        e["common_roots"] = w.common_root_count;
        e["common_factor"] = to_string(w.common_factor);
        wits.push_back(e);
    }
    j["witnesses"] = wits;
    j["endpoint_roots"] = {{"lo", rep.endpoint_root_lo}, {"hi", rep.endpoint_root_hi}};
    j["pass"] = rep.pass;
    return j;
}

std::string csv_header() {
    return "family,partition,k,d_lambda,predicted,exact,origin_mult,degenerate,pass";
}

std::string report_to_csv_row(const VerificationReport& rep) {
    std::ostringstream os;
    os << rep.family.name() << ",\"" << to_string(rep.partition) << "\",\""
       << to_string(rep.k) << "\"," << rep.d << "," << rep.predicted_total << ","
       << rep.exact_count << "," << rep.exact_origin_mult << ","
       << (rep.degenerate ? "true" : "false") << "," << (rep.pass ? "true" : "false");
    return os.str();
}

std::string render_report_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << rep.family.name() << " lambda=(" << to_string(rep.partition) << ") k=("
       << to_string(rep.k) << ") d=" << rep.d;
    if (rep.family.kind() == FamilyKind::FromMoments) os << "  [conjecture probe]";
    os << "\n";
    if (rep.predicted_sym) {
        os << "  predicted: total " << rep.predicted_total << ", origin multiplicity "
           << rep.predicted_sym->origin_multiplicity << ", positive "
           << rep.predicted_sym->positive_count << ", negative "
           << rep.predicted_sym->negative_count << "\n";
        os << "  exact:     total " << rep.exact_count << ", origin multiplicity "
           << rep.exact_origin_mult << ", positive " << *rep.exact_positive
           << ", negative " << *rep.exact_negative << "\n";
    } else {
        os << "  predicted: " << rep.predicted_total << " simple roots in "
           << to_string(rep.family.interval()) << "\n";
        os << "  exact:     " << rep.exact_count << " distinct roots\n";
    }
    if (!rep.root_multiplicities.empty()) {
        os << "  multiplicities:";
        for (const auto& rm : rep.root_multiplicities)
            os << " " << rm.distinct_roots << "x(mult " << rm.multiplicity << ")";
        os << "\n";
    }
    if (rep.endpoint_root_lo || rep.endpoint_root_hi)
        os << "  warning: root at an interval endpoint (excluded from counts)\n";
    if (rep.degenerate) {
        os << "  degenerate:\n";
        for (const auto& w : rep.witnesses) os << "    " << w.describe() << "\n";
    }
    os << "  result: "
       << (rep.degenerate ? "skipped (degenerate)" : (rep.pass ? "pass" : "MISMATCH"))
       << "\n";
    return os.str();
}

} // namespace wrz
