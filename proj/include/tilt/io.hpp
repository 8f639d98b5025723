// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TILT_IO_HPP
#define TILT_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "tilt/losses.hpp"
#include "tilt/measures.hpp"
#include "tilt/update.hpp"

namespace tilt {

using Measure = std::variant<DiscreteMeasure, GridMeasure>;

// Measure files:
//   {"type":"discrete","points":[...],"weights":[...]}
//   {"type":"grid","lo":..,"hi":..,"n":..,"density":[...]}
// Weights/densities may be unnormalized on input; written files are always
// normalized. Points are strings or numbers.
Measure read_measure(const std::string& path);
void write_measure(const std::string& path, const Measure& m);
std::string measure_to_json(const Measure& m);
Measure measure_from_json(const std::string& text);

// Loss files: {"variant":"tabular","values":{...}} etc.; optional "k";
// the string "inf" encodes +infinity.
LossFunction read_loss(const std::string& path);
void write_loss(const std::string& path, const LossFunction& h);
LossFunction loss_from_json(const std::string& text);
std::string loss_to_json(const LossFunction& h);

// Joint tables: {"type":"joint","x_labels":[...],"y_labels":[...],
//                "mass":[[...],...]}
JointTable read_joint(const std::string& path);
JointTable joint_from_json(const std::string& text);

void write_report(const std::string& path, const UpdateReport& rep);
void write_report(const std::string& path, const GridUpdateReport& rep);

}  // namespace tilt

#endif
