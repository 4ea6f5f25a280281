#ifndef PSIKIT_MODEL_IO_HPP
#define PSIKIT_MODEL_IO_HPP

#include <string>

#include "psikit/ncmodel.hpp"

namespace psikit {

// JSON model files.  Canonical serialization: components and points sorted,
// "on" lists sorted, class triples sorted by (i, j); save(load(x)) == x on
// canonical input.
NCModel model_from_json(const std::string& text);
std::string model_to_json(const NCModel& model);
NCModel load_model(const std::string& path);
void save_model(const NCModel& model, const std::string& path);

CenterSpec center_from_json(const std::string& text);
std::string center_to_json(const CenterSpec& center);
CenterSpec load_center(const std::string& path);

}  // namespace psikit

#endif
