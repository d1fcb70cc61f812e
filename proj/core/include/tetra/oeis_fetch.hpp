#pragma once

#include <chrono>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tetra/bfile.hpp"

namespace tetra {

class TransportError : public std::runtime_error {
 public:
  enum class Kind {
    offline,    // host unreachable, DNS failure, timeout, TLS failure
    not_found,  // server answered 404
    http,       // any other non-200 status
  };

  TransportError(Kind kind, int status, const std::string& what)
      : std::runtime_error(what), kind_(kind), status_(status) {}

  Kind kind() const noexcept { return kind_; }
  int status() const noexcept { return status_; }

 private:
  Kind kind_;
  int status_;
};

class StorageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Environment variables consulted by the defaults below.
inline constexpr const char* kOeisBaseUrlEnv = "TETRA_OEIS_BASE_URL";
inline constexpr const char* kOeisCacheDirEnv = "TETRA_OEIS_CACHE";

/// $TETRA_OEIS_BASE_URL, else "https://oeis.org".
std::string default_oeis_base_url();

/// $TETRA_OEIS_CACHE, else "./oeis-cache".
std::filesystem::path default_oeis_cache_dir();

struct FetchOptions {
  std::string base_url = default_oeis_base_url();
  std::chrono::seconds timeout{10};
};

/// Returns cache_dir/b<digits>.txt if present. Otherwise issues one GET for
/// <base_url>/A<digits>/b<digits>.txt, stores the body in the cache and
/// parses it. Throws DomainError for a malformed id, TransportError for
/// network failures and StorageError when the cache cannot be written.
BFile fetch_bfile(std::string_view oeis_id, const std::filesystem::path& cache_dir,
                  const FetchOptions& options = {});

}  // namespace tetra
