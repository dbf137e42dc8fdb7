// Copyright 2026 The mspider Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSPIDER_BACKEND_CACHED_BACKEND_H_
#define MSPIDER_BACKEND_CACHED_BACKEND_H_

#include <atomic>
#include <filesystem>
#include <map>
#include <shared_mutex>
#include <string>
#include <variant>

#include "mspider/backend/backend.h"

namespace mspider::backend {

// Memoizes another backend, optionally persisted to a JSON-lines file.
// Keys are SHA-256 digests of (endpoint, inner identity, request body), so
// entries of different backend versions never mix. Lookups take a shared
// lock; inserts are serialized. Flush rewrites the file through a
// temporary and a rename, so a crash leaves either the old or the new file.
class CachedBackend : public Backend {
 public:
  // Loads `path` when it exists. An empty path keeps the cache in memory.
  CachedBackend(Backend& inner, std::filesystem::path path = {});
  ~CachedBackend() override;

  std::string Translate(const TranslationRequest& request) override;
  double Entail(const EntailmentRequest& request) override;
  std::string Identity() const override { return inner_.Identity(); }

  void Flush();

  std::size_t size() const;
  long hits() const;
  long misses() const;

 private:
  using Entry = std::variant<std::string, double>;

  std::string Key(const char* endpoint, const std::string& body) const;
  bool Lookup(const std::string& key, Entry& out);
  void Store(const std::string& key, Entry value);

  Backend& inner_;
  std::filesystem::path path_;
  mutable std::shared_mutex mu_;
  std::map<std::string, Entry> entries_;
  std::map<std::string, Entry> pending_;  // not yet flushed
  std::atomic<long> hits_{0};
  std::atomic<long> misses_{0};
};

}  // namespace mspider::backend

#endif  // MSPIDER_BACKEND_CACHED_BACKEND_H_
