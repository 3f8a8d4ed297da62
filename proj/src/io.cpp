#include "nullcert/io.hpp"

#include <fstream>
#include <sstream>

#include "nullcert/errors.hpp"

namespace nullcert {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("cannot read '" + path.string() + "'");
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
  out.flush();
  if (!out) throw Error("cannot write '" + path.string() + "'");
}

}  // namespace nullcert
