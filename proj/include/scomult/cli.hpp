#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scomult::cli {

/// Exit codes; the only part of the CLI that scripts should rely on.
enum Exit : int { kTrue = 0, kFalse = 1, kPrecondition = 2, kInputError = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int main(int argc, char** argv);

/// Predicate names accepted by `check`, in help order.
const std::vector<std::string>& predicate_names();

struct CheckRequest {
  std::string instance_path;
  std::string predicate;
  std::string mcs;        // literal such as "{1,3}"; empty uses the file's first m.c.s.
  std::string module;     // module name; empty uses the first
  std::string submodule;  // submodule name or literal
  std::string ideal;      // ideal name or literal
  std::string hom;        // hom name; empty uses the first
};
int cmd_check(const CheckRequest& req, std::ostream& out, std::ostream& err);

int cmd_enumerate(const std::string& instance_path, const std::string& what, const std::string& owner,
                  std::ostream& out, std::ostream& err);

}  // namespace scomult::cli
