#include "tetra/oeis_fetch.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include <httplib.h>

#include "tetra/errors.hpp"

namespace tetra {

namespace {

struct Endpoint {
  std::string scheme_host_port;
  std::string path_prefix;
};

Endpoint split_base_url(const std::string& base_url) {
  const auto scheme_end = base_url.find("://");
  const auto path_start =
      base_url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  Endpoint ep;
  ep.scheme_host_port = base_url.substr(0, path_start);
  if (path_start != std::string::npos) {
    ep.path_prefix = base_url.substr(path_start);
    while (!ep.path_prefix.empty() && ep.path_prefix.back() == '/') ep.path_prefix.pop_back();
  }
  return ep;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes via a uniquely named sibling and renames it into place, so readers
// never observe a partial cache entry.
void store_atomically(const std::filesystem::path& target, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(target.parent_path(), ec);
  if (ec) {
    throw StorageError("cannot create cache directory " + target.parent_path().string() + ": " +
                       ec.message());
  }
  std::random_device rd;
  const auto tmp = target.parent_path() /
                   (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out || !(out << body) || !out.flush()) {
      std::filesystem::remove(tmp, ec);
      throw StorageError("cannot write cache entry " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw StorageError("cannot move cache entry into " + target.string() + ": " + ec.message());
  }
}

}  // namespace

std::string default_oeis_base_url() {
  if (const char* env = std::getenv(kOeisBaseUrlEnv); env != nullptr && *env != '\0') return env;
  return "https://oeis.org";
}

std::filesystem::path default_oeis_cache_dir() {
  if (const char* env = std::getenv(kOeisCacheDirEnv); env != nullptr && *env != '\0') return env;
  return "oeis-cache";
}

BFile fetch_bfile(std::string_view oeis_id, const std::filesystem::path& cache_dir,
                  const FetchOptions& options) {
  const std::string name = bfile_name(oeis_id);  // validates the id
  const std::string id(oeis_id);
  const auto cached = cache_dir / name;
  if (std::filesystem::is_regular_file(cached)) return parse_bfile(read_file(cached), id);

  const Endpoint ep = split_base_url(options.base_url);
  httplib::Client client(ep.scheme_host_port);
  if (!client.is_valid()) {
    throw TransportError(TransportError::Kind::offline, 0,
                         "unsupported OEIS base URL '" + options.base_url + "'");
  }
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_follow_location(true);

  const std::string path = ep.path_prefix + "/" + id + "/" + name;
  auto res = client.Get(path);
  if (!res) {
    throw TransportError(TransportError::Kind::offline, 0,
                         "cannot reach " + options.base_url + " for " + id + ": " +
                             httplib::to_string(res.error()));
  }
  if (res->status == 404) {
    throw TransportError(TransportError::Kind::not_found, 404,
                         "OEIS has no b-file for " + id + " (" + path + ")");
  }
  if (res->status != 200) {
    throw TransportError(TransportError::Kind::http, res->status,
                         "GET " + path + " returned HTTP " + std::to_string(res->status));
  }
  BFile parsed = parse_bfile(res->body, id);
  store_atomically(cached, res->body);
  return parsed;
}

}  // namespace tetra
