#ifndef PSIKIT_TEST_HELPERS_HPP
#define PSIKIT_TEST_HELPERS_HPP

#include <string>

#ifndef PSIKIT_FIXTURE_DIR
#define PSIKIT_FIXTURE_DIR "fixtures"
#endif

inline std::string fixture_path(const std::string& name) {
  return std::string(PSIKIT_FIXTURE_DIR) + "/" + name + ".json";
}

#endif
