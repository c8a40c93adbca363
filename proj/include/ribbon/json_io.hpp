#pragma once

#include <string>
#include <vector>

#include "ribbon/common.hpp"
#include "ribbon/enumeration.hpp"
#include "ribbon/knuth_growth.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/ribbons.hpp"
#include "ribbon/shape_data.hpp"
#include "ribbon/strips.hpp"

// JSON rendering and parsing for every externally visible type. Rendering is
// deterministic (compact single line, fixed key order); parsing throws
// Error{InvalidInput} with a readable message on malformed text of any kind.
namespace ribbon {

// [6,4,3,3,1]
std::string json_of_partition(const Partition& p);
// {"offset":int,"bits":"0/1 string","left_fill":0|1,"right_fill":0|1}
std::string json_of_edge(const EdgeSeq& e);
// {"core":[...],"quotient":[[...],...],"r":int}
std::string json_of_quotient(const CoreQuotient& cq);
// {"positions":[...],"heights":[...],"dspin":int,"count":int}
std::string json_of_strip(const RibbonStrip& s);
// [a_0,...,a_{r-1}]
std::string json_of_color_vector(const ColorVector& a);
// {"core":[...],"r":int,"chain":[[...],...],"orientation":"h"|"v"}
std::string json_of_tableau(const RibbonTableau& t);
// 3-deep array: rows of cells of colour components.
std::string json_of_matrix(const ColorMatrix& entries);
// {"datum":name,"r":int,"core":[...],"shapes":[[[...]]],"entries":[[[...]]]}
std::string json_of_growth(const KnuthGrowth& g);
// {"terms":[{"x":n,"y":t,"c":int},...],"x_bound":int|null}, sorted by (x,y)
std::string json_of_genpoly(const GenPoly& p);
// {"ok":bool,"details":[...]}
std::string json_of_report(const CheckReport& rep);
// [{"k":int,"c":int,"action":name,"a_after":int,"after":edge},...]
std::string json_of_burge_trace(const std::vector<BurgeEdgeStep>& steps);

Partition partition_from_json(const std::string& text);
EdgeSeq edge_from_json(const std::string& text);
CoreQuotient quotient_from_json(const std::string& text);
ColorVector color_vector_from_json(const std::string& text);
// Parses and structurally validates; step shapes are not strip-checked here.
RibbonTableau tableau_from_json(const std::string& text);
// Rectangular with r components per cell (enforced by the consumer).
ColorMatrix matrix_from_json(const std::string& text);
GenPoly genpoly_from_json(const std::string& text);

// What a piece of input JSON structurally is, for input auto-detection:
// a bare array is a partition, an object with "bits" an edge sequence, an
// object with "quotient" a core/quotient pair.
enum class JsonKind { Partition, Edge, Quotient, Other };
JsonKind classify_json(const std::string& text);

}  // namespace ribbon
