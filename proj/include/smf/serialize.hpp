#pragma once

// FSMF/1: line-oriented text format for formal forms.
//
//   FSMF 1
//   weight <k> <j>            (k is "?" when unknown)
//   character <1|det|sigma|det.sigma>
//   ring <rational | poly <j> | groupring <j>>
//   precision disc <X>
//   <a> <b> <c> : <value>     one line per reduced key, index order
//
// Polynomial values list the coefficients of X^j ... Y^j; group-ring values
// list the four components in the order 1, det, sigma, det.sigma.

#include <iosfwd>
#include <string>

#include "smf/fsmf.hpp"

namespace smf {

std::string serialize(const FormalSMF& F);
// Throws ParseError.
FormalSMF deserialize(const std::string& text);

void save_fsmf(const FormalSMF& F, const std::string& path);
FormalSMF load_fsmf(const std::string& path);

}  // namespace smf
