#pragma once

#include <string>

#include <json.hpp>

#include "glq/colligation.hpp"
#include "glq/coset.hpp"

namespace glq {

// Text formats.
// Matrix: rows separated by ';', entries by whitespace, scalars in the field
// text form ("1 0; 1 1"). Window: a header "RM |a| RP / CM |b| CP" giving
// the row and column paddings around the middle blocks, then the matrix.
// Colligation: a header "m n", then the (m+n)×(m+n) matrix.

std::string mat_to_text(const Mat& m);
Mat parse_mat(const std::string& text, const FieldSpec& f);

std::string window_to_text(const Window& w);
// alpha_lo fixes the target object (the header only carries sizes).
Window parse_window(const std::string& text, const FieldSpec& f, int alpha_lo = 0);

std::string colligation_to_text(const Colligation& g);
Colligation parse_colligation(const std::string& text, const FieldSpec& f);

std::string kappa_to_text(const KappaTable& t);

// JSON forms.
nlohmann::json field_to_json(const FieldSpec& f);
const FieldSpec& field_from_json(const nlohmann::json& j);

nlohmann::json relation_to_json(const LinRel& r);
LinRel relation_from_json(const nlohmann::json& j, const FieldSpec& f);

nlohmann::json coset_to_json(const Coset& c);
Coset coset_from_json(const nlohmann::json& j);

nlohmann::json kappa_to_json(const KappaTable& t);

}  // namespace glq
