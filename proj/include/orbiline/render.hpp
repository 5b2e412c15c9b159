#pragma once

// Stable text renderings: CSV for scan tables, JSON for gap reports. The
// CLI and the determinism tests share these, so output is byte-identical
// for identical inputs. All numeric output carries the exact rational form
// next to a float rendering.

#include "orbiline/gldim.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace orbiline {

inline std::string float_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string gauss_str(GaussRat const& z) {
    std::string out = rat_str(z.re);
    out += z.im.sign() < 0 ? " - " : " + ";
    Rat im = z.im.sign() < 0 ? Rat(-z.im) : z.im;
    out += rat_str(im) + "*i";
    return out;
}

/// Exact rational string when the gap direction lies on an axis or
/// diagonal (value offset + k/4), float string otherwise.
inline std::string gap_value_str(Phase const& value) {
    if (auto exact = phase_exact_rational(value)) return rat_str(*exact);
    return float_str(phase_float(value));
}

inline std::string csv_field(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string scan_csv(WeightSpec const& spec, ScanResult const& result) {
    std::string out = "tau_re,tau_im,lower_bound_float,exact_flag,witness_a,witness_b,witness_ext\n";
    for (ScanRow const& row : result.rows) {
        out += csv_field(rat_str(row.tau.re)) + ",";
        out += csv_field(rat_str(row.tau.im)) + ",";
        out += float_str(row.report.float_value) + ",";
        out += exactness_name(row.report.exactness);
        out += "," + csv_field(object_literal(spec, row.report.witness_a));
        out += "," + csv_field(object_literal(spec, row.report.witness_b));
        out += row.report.witness_ext ? ",true\n" : ",false\n";
    }
    out += "# infimum," + float_str(result.rows[result.infimum_index].report.float_value) + "\n";
    return out;
}

inline nlohmann::ordered_json gauss_json(GaussRat const& z) {
    return {{"re", rat_str(z.re)}, {"im", rat_str(z.im)}};
}

inline nlohmann::ordered_json gap_json(WeightSpec const& spec, GapReport const& report) {
    nlohmann::ordered_json j;
    j["value"] = gap_value_str(report.value);
    j["value_float"] = report.float_value;
    j["dir"] = {{"offset", report.value.offset},
                {"re", rat_str(report.value.dir.re)},
                {"im", rat_str(report.value.dir.im)}};
    j["witness_a"] = object_literal(spec, report.witness_a);
    j["witness_b"] = object_literal(spec, report.witness_b);
    j["witness_ext"] = report.witness_ext;
    j["exact_flag"] = exactness_name(report.exactness);
    return j;
}

}  // namespace orbiline
