#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acs {

enum class DesignFamily { PgLines, AgLines, InversivePlane, HermitianUnital, FromFile };

std::string_view to_string(DesignFamily family);

/// Where a tau-(v, w, lambda) design came from and what it claims to be.
struct DesignDescriptor {
  DesignFamily family = DesignFamily::FromFile;
  std::uint32_t n = 0;  // dimension, geometry families only
  std::uint32_t q = 0;  // field order, geometry families only
  std::string path;     // FromFile only
  std::uint32_t tau = 0;
  std::uint32_t v = 0;
  std::uint32_t w = 0;
  std::uint32_t lambda = 1;
};

/// Record of a d-point extension of a tau-(v-d, w-d, 1) design. The appended
/// points are the last d indices of the extended system. A certificate is a
/// claim; verifiers re-check it against the blocks before trusting it.
struct ExtensionCertificate {
  DesignDescriptor base;
  std::uint32_t d = 0;
  std::uint32_t t = 0;
  std::uint32_t tau = 0;
};

/// One-line form stored as a comment in set-system files.
std::string render_certificate(const ExtensionCertificate& cert);
std::optional<ExtensionCertificate> parse_certificate(const std::string& comment);
std::optional<ExtensionCertificate> find_certificate(const std::vector<std::string>& comments);

}  // namespace acs
