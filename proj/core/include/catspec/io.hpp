#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "catspec/cfrac.hpp"
#include "catspec/recover.hpp"
#include "catspec/spectral_polynomials.hpp"
#include "catspec/spectrum.hpp"
#include "catspec/tree.hpp"

namespace catspec {

using json = nlohmann::json;

// {"interior_degrees": [...], "p": n}; reading also accepts a bare array.
json shape_to_json(const CaterpillarShape& s);
CaterpillarShape shape_from_json(const json& j);

// Ascending coefficient array of exact strings ("-120", "3/2"). Reading
// accepts strings and integers; floats are rejected so measured data cannot
// silently enter an exact computation.
json poly_to_json(const RationalPoly& p);
RationalPoly poly_from_json(const json& j);

// {"num": [...], "den": [...]}
json ratio_to_json(const RationalFunction& r);
RationalFunction ratio_from_json(const json& j);

json real_ratio_to_json(const RealRationalFunction& r);
RealRationalFunction real_ratio_from_json(const json& j);  // accepts any numbers

// {"psi": [...], "theta": [...], "omega": [...]}
json pencil_to_json(const PencilPair& pp);

// Stage list with residuals as double coefficient arrays.
json trace_to_json(const ExpansionTrace& t);

json spectrum_to_json(const Spectrum& s);

// Columns: index,lambda,sqrt_lambda,branch_kind,branch_i,window_k with a
// header row; label columns are empty for unlabeled entries. The edge length
// is not part of the file and travels separately.
void write_spectrum_csv(std::ostream& os, const Spectrum& s);
Spectrum read_spectrum_csv(std::istream& is);

json root_set_to_json(const RootSet& rs);
json cluster_set_to_json(const ClusterSet& cs);
json report_to_json(const RecoveryReport& rep);

}  // namespace catspec
