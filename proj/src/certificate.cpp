#include "acs/certificate.hpp"

#include <map>
#include <sstream>

namespace acs {

namespace {

constexpr std::string_view kTag = "extension-certificate";

std::optional<DesignFamily> family_from(std::string_view name) {
  for (auto f : {DesignFamily::PgLines, DesignFamily::AgLines, DesignFamily::InversivePlane,
                 DesignFamily::HermitianUnital, DesignFamily::FromFile})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

std::optional<std::uint32_t> to_u32(const std::string& s) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

std::string_view to_string(DesignFamily family) {
  switch (family) {
    case DesignFamily::PgLines: return "pg-lines";
    case DesignFamily::AgLines: return "ag-lines";
    case DesignFamily::InversivePlane: return "inversive-plane";
    case DesignFamily::HermitianUnital: return "hermitian-unital";
    case DesignFamily::FromFile: return "from-file";
  }
  return "?";
}

std::string render_certificate(const ExtensionCertificate& cert) {
  std::ostringstream out;
  const auto& b = cert.base;
  out << kTag << " family=" << to_string(b.family) << " n=" << b.n << " q=" << b.q << " base-tau=" << b.tau
      << " base-v=" << b.v << " base-w=" << b.w << " base-lambda=" << b.lambda << " d=" << cert.d
      << " t=" << cert.t << " tau=" << cert.tau;
  if (!b.path.empty()) out << " path=" << b.path;
  return out.str();
}

std::optional<ExtensionCertificate> parse_certificate(const std::string& comment) {
  std::istringstream in(comment);
  std::string tag;
  if (!(in >> tag) || tag != kTag) return std::nullopt;

  std::map<std::string, std::string> fields;
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) return std::nullopt;
    std::string key = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    if (key == "path") {
      // the path runs to the end of the line
      std::string rest;
      std::getline(in, rest);
      value += rest;
    }
    if (!fields.emplace(std::move(key), std::move(value)).second) return std::nullopt;
  }

  ExtensionCertificate cert;
  const auto family = fields.count("family") ? family_from(fields["family"]) : std::nullopt;
  if (!family) return std::nullopt;
  cert.base.family = *family;
  if (fields.count("path")) cert.base.path = fields["path"];

  const std::pair<const char*, std::uint32_t*> numeric[] = {
      {"n", &cert.base.n},         {"q", &cert.base.q}, {"base-tau", &cert.base.tau},
      {"base-v", &cert.base.v},    {"base-w", &cert.base.w}, {"base-lambda", &cert.base.lambda},
      {"d", &cert.d},              {"t", &cert.t},      {"tau", &cert.tau}};
  for (const auto& [key, slot] : numeric) {
    const auto it = fields.find(key);
    if (it == fields.end()) return std::nullopt;
    const auto value = to_u32(it->second);
    if (!value) return std::nullopt;
    *slot = *value;
  }
  return cert;
}

std::optional<ExtensionCertificate> find_certificate(const std::vector<std::string>& comments) {
  for (const auto& c : comments)
    if (auto cert = parse_certificate(c)) return cert;
  return std::nullopt;
}

}  // namespace acs
