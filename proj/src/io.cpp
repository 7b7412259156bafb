#include "gp/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace gp {

namespace {

using nlohmann::ordered_json;

// re-read the rounded rendering so JSON numbers carry the same precision
// policy as the CSV text
double requantize(double v, int sig) {
    return std::strtod(format_sig(v, sig).c_str(), nullptr);
}

template <typename T>
std::string join_spaced(const std::vector<T>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ' ';
        out << xs[i];
    }
    return out.str();
}

}  // namespace

std::string format_sig(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::ostringstream out;
    out << "index,value\n";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        out << i << ',' << format_sig(s.values[i], 12) << '\n';
    return out.str();
}

nlohmann::ordered_json spectrum_to_json(const Spectrum& s) {
    ordered_json j;
    j["n"] = s.n;
    j["k"] = s.k;
    j["source"] = s.source == SpectrumSource::ClosedForm ? "closed_form" : "oracle";
    auto& vals = j["values"] = ordered_json::array();
    for (double v : s.values) vals.push_back(requantize(v, 12));
    return j;
}

std::string gap_rows_to_csv(const std::vector<GapRow>& rows) {
    std::ostringstream out;
    out << "n,k,gap,bound,ok\n";
    for (const GapRow& r : rows)
        out << r.n << ',' << r.k << ',' << format_sig(r.gap, 12) << ','
            << format_sig(r.bound, 12) << ',' << (r.ok ? 1 : 0) << '\n';
    return out.str();
}

nlohmann::ordered_json gap_rows_to_json(const std::vector<GapRow>& rows) {
    ordered_json j;
    auto& arr = j["rows"] = ordered_json::array();
    for (const GapRow& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["k"] = r.k;
        row["gap"] = requantize(r.gap, 12);
        row["bound"] = requantize(r.bound, 12);
        row["ok"] = r.ok;
        arr.push_back(std::move(row));
    }
    return j;
}

std::string census_to_csv(const std::vector<CensusRecord>& recs) {
    std::ostringstream out;
    out << "N,a_lower,b_count,ratio\n";
    for (const CensusRecord& r : recs)
        out << r.N << ',' << r.a_lower << ',' << r.b_count << ','
            << format_sig(r.ratio, 6) << '\n';
    return out.str();
}

nlohmann::ordered_json census_to_json(const std::vector<CensusRecord>& recs) {
    ordered_json j;
    auto& arr = j["records"] = ordered_json::array();
    for (const CensusRecord& r : recs) {
        ordered_json row;
        row["N"] = r.N;
        row["a_lower"] = r.a_lower;
        row["b_count"] = r.b_count;
        row["ratio"] = requantize(r.ratio, 6);
        arr.push_back(std::move(row));
    }
    return j;
}

std::string witnesses_to_csv(const std::vector<DirichletWitness>& ws) {
    std::ostringstream out;
    out << "t,q,t0,x\n";
    for (const DirichletWitness& w : ws)
        out << w.t << ',' << w.q << ',' << w.t0 << ',' << join_spaced(w.x) << '\n';
    return out.str();
}

nlohmann::ordered_json witnesses_to_json(const std::vector<DirichletWitness>& ws) {
    ordered_json j;
    auto& arr = j["witnesses"] = ordered_json::array();
    for (const DirichletWitness& w : ws) {
        ordered_json row;
        row["t"] = w.t;
        row["q"] = w.q;
        row["t0"] = w.t0;
        row["x"] = w.x;
        arr.push_back(std::move(row));
    }
    return j;
}

std::string cluster_to_csv(const GoodIndexSet& s, std::int64_t count, std::int64_t floor_m) {
    std::ostringstream out;
    out << "n,k,eps,q,floor,near_valency_count,good_index_count,indices\n";
    out << s.n << ',' << s.k << ',' << (s.eps ? format_sig(*s.eps, 6) : "") << ',' << s.q
        << ',' << floor_m << ',' << count << ',' << s.indices.size() << ','
        << join_spaced(s.indices) << '\n';
    return out.str();
}

nlohmann::ordered_json cluster_to_json(const GoodIndexSet& s, std::int64_t count,
                                       std::int64_t floor_m) {
    ordered_json j;
    j["n"] = s.n;
    j["k"] = s.k;
    if (s.eps)
        j["eps"] = requantize(*s.eps, 6);
    else
        j["eps"] = nullptr;
    j["q"] = s.q;
    j["floor"] = floor_m;
    j["near_valency_count"] = count;
    j["good_index_count"] = s.indices.size();
    j["indices"] = s.indices;
    return j;
}

std::string expansion_to_csv(const GpParams& p, const ExpansionResult& r, bool skip_h,
                             bool sandwich_ok) {
    std::ostringstream out;
    out << "n,k,h,witness,lower,upper,corollary_bound,sandwich_ok\n";
    out << p.n << ',' << p.k << ',';
    if (skip_h)
        out << "not computed,,";
    else
        out << format_sig(r.h, 12) << ',' << join_spaced(r.witness_set) << ',';
    out << format_sig(r.lower, 12) << ',' << format_sig(r.upper, 12) << ',';
    if (std::isnan(r.corollary_bound))
        out << "";
    else
        out << format_sig(r.corollary_bound, 12);
    out << ',';
    if (!skip_h) out << (sandwich_ok ? 1 : 0);
    out << '\n';
    return out.str();
}

nlohmann::ordered_json expansion_to_json(const GpParams& p, const ExpansionResult& r,
                                         bool skip_h, bool sandwich_ok) {
    ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    if (skip_h) {
        j["h"] = nullptr;
        j["witness_set"] = nullptr;
    } else {
        j["h"] = requantize(r.h, 12);
        j["witness_set"] = r.witness_set;
    }
    j["lower"] = requantize(r.lower, 12);
    j["upper"] = requantize(r.upper, 12);
    if (std::isnan(r.corollary_bound))
        j["corollary_bound"] = nullptr;
    else
        j["corollary_bound"] = requantize(r.corollary_bound, 12);
    if (skip_h)
        j["sandwich_ok"] = nullptr;
    else
        j["sandwich_ok"] = sandwich_ok;
    return j;
}

}  // namespace gp
