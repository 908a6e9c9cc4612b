#include "qpu/certificate.hpp"

#include <fstream>

#include "qpu/common.hpp"

namespace qpu {

nlohmann::ordered_json make_certificate(const std::string& command,
                                        nlohmann::ordered_json inputs,
                                        nlohmann::ordered_json result,
                                        nlohmann::ordered_json witnesses) {
  nlohmann::ordered_json cert;
  cert["command"] = command;
  cert["inputs"] = std::move(inputs);
  cert["result"] = std::move(result);
  cert["witnesses"] = std::move(witnesses);
  cert["tool_version"] = kToolVersion;
  return cert;
}

std::string certificate_text(const nlohmann::ordered_json& cert) {
  return cert.dump(2) + "\n";
}

void write_certificate(const std::string& path, const nlohmann::ordered_json& cert) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  const std::string text = certificate_text(cert);
  out.write(text.data(), (std::streamsize)text.size());
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

}  // namespace qpu
