#include "catspec/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "catspec/errors.hpp"

namespace catspec {

json shape_to_json(const CaterpillarShape& s) {
    return json{{"interior_degrees", s.interior_degrees()}, {"p", s.vertex_count()}};
}

CaterpillarShape shape_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("interior_degrees")) throw Error("shape JSON lacks interior_degrees");
        arr = &j.at("interior_degrees");
    }
    if (!arr->is_array()) throw Error("interior_degrees must be an array");
    std::vector<int> degrees;
    for (const auto& el : *arr) {
        if (!el.is_number_integer()) throw Error("interior degrees must be integers");
        degrees.push_back(el.get<int>());
    }
    return CaterpillarShape(std::move(degrees));
}

json poly_to_json(const RationalPoly& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

RationalPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw Error("polynomial must be a coefficient array");
    std::vector<Rat> c;
    for (const auto& el : j) {
        if (el.is_string()) {
            c.push_back(rat_from_string(el.get<std::string>()));
        } else if (el.is_number_integer()) {
            c.push_back(Rat(el.get<long long>()));
        } else {
            throw Error(
                "exact coefficients must be integers or rational strings; "
                "measured data needs a tolerance-based expansion");
        }
    }
    return RationalPoly(std::move(c));
}

json ratio_to_json(const RationalFunction& r) {
    return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

RationalFunction ratio_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error("ratio JSON needs num and den arrays");
    return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

namespace {

json doubles_to_json(const std::vector<double>& v) {
    return json(v);
}

std::vector<double> doubles_from_json(const json& j) {
    if (!j.is_array()) throw Error("expected a coefficient array");
    std::vector<double> v;
    for (const auto& el : j) {
        if (el.is_string()) {
            v.push_back(to_double(rat_from_string(el.get<std::string>())));
        } else if (el.is_number()) {
            v.push_back(el.get<double>());
        } else {
            throw Error("coefficients must be numbers or rational strings");
        }
    }
    return v;
}

json poly_to_doubles(const RationalPoly& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(to_double(c));
    return arr;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

json real_ratio_to_json(const RealRationalFunction& r) {
    return json{{"num", doubles_to_json(r.num)}, {"den", doubles_to_json(r.den)}};
}

RealRationalFunction real_ratio_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error("ratio JSON needs num and den arrays");
    return {doubles_from_json(j.at("num")), doubles_from_json(j.at("den"))};
}

json pencil_to_json(const PencilPair& pp) {
    return json{{"psi", poly_to_json(pp.psi)},
                {"theta", poly_to_json(pp.theta)},
                {"omega", poly_to_json(pp.omega)}};
}

json trace_to_json(const ExpansionTrace& t) {
    json arr = json::array();
    for (const ExpansionStage& st : t.stages) {
        arr.push_back(json{{"index", st.index},
                           {"m", st.m},
                           {"rounding_error", st.rounding_error},
                           {"truncation_error", st.truncation_error},
                           {"residual", json{{"num", poly_to_doubles(st.residual.num())},
                                             {"den", poly_to_doubles(st.residual.den())}}}});
    }
    return arr;
}

json spectrum_to_json(const Spectrum& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        json je{{"lambda", e.lambda}, {"sqrt_lambda", e.sqrt_lambda}};
        if (e.label) {
            je["branch_kind"] = branch_kind_name(e.label->kind);
            je["branch_i"] = e.label->branch_index;
            je["window_k"] = e.label->window;
        }
        entries.push_back(std::move(je));
    }
    return json{{"l", s.l}, {"entries", std::move(entries)}};
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
    os << "index,lambda,sqrt_lambda,branch_kind,branch_i,window_k\n";
    size_t idx = 1;
    for (const auto& e : s.entries) {
        os << idx++ << ',' << fmt_double(e.lambda) << ',' << fmt_double(e.sqrt_lambda) << ',';
        if (e.label)
            os << branch_kind_name(e.label->kind) << ',' << e.label->branch_index << ','
               << e.label->window;
        else
            os << ",,";
        os << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw Error(std::string("trailing characters in ") + what);
        return v;
    } catch (const std::logic_error&) {
        throw Error(std::string("cannot parse ") + what + ": '" + s + "'");
    }
}

int parse_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw Error(std::string("trailing characters in ") + what);
        return v;
    } catch (const std::logic_error&) {
        throw Error(std::string("cannot parse ") + what + ": '" + s + "'");
    }
}

}  // namespace

Spectrum read_spectrum_csv(std::istream& is) {
    Spectrum s;
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line.rfind("index,", 0) != 0)
                throw Error("spectrum CSV must start with the index,lambda,... header");
            saw_header = true;
            continue;
        }
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 6) throw Error("spectrum CSV rows need 6 fields");
        SpectrumEntry e;
        e.lambda = parse_double(f[1], "lambda");
        e.sqrt_lambda = parse_double(f[2], "sqrt_lambda");
        if (!f[3].empty()) {
            e.label = BranchLabel{branch_kind_from_name(f[3]), parse_int(f[4], "branch_i"),
                                  parse_int(f[5], "window_k")};
        }
        s.entries.push_back(e);
    }
    if (!saw_header) throw Error("empty spectrum CSV");
    return s;
}

json root_set_to_json(const RootSet& rs) {
    json arr = json::array();
    for (const auto& e : rs.entries)
        arr.push_back(json{{"value", e.value}, {"multiplicity", e.multiplicity}});
    return arr;
}

json cluster_set_to_json(const ClusterSet& cs) {
    json arr = json::array();
    for (const Cluster& c : cs.clusters)
        arr.push_back(json{{"center", c.center},
                           {"weight", c.weight},
                           {"spread", c.spread},
                           {"members", c.members}});
    return json{{"clusters", std::move(arr)},
                {"windows", cs.windows},
                {"gap", cs.gap},
                {"outliers_dropped", cs.outliers_dropped}};
}

json report_to_json(const RecoveryReport& rep) {
    json j{{"success", rep.success},
           {"status", rep.status},
           {"inferred_p", rep.inferred_p},
           {"alphas", root_set_to_json(rep.alphas)},
           {"betas", root_set_to_json(rep.betas)},
           {"assembled", real_ratio_to_json(rep.assembled)},
           {"trace", trace_to_json(rep.trace)},
           {"neumann_clusters", cluster_set_to_json(rep.neumann_clusters)},
           {"dirichlet_clusters", cluster_set_to_json(rep.dirichlet_clusters)},
           {"notes", rep.notes}};
    if (rep.success) {
        j["shape"] = shape_to_json(rep.shape);
        j["canonical_degrees"] = canonicalize(rep.shape).degrees;
    }
    return j;
}

}  // namespace catspec
