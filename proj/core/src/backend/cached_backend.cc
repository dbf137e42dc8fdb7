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

#include "mspider/backend/cached_backend.h"

#include <fstream>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mspider/dataset_io.h"
#include "mspider/util/digest.h"

namespace mspider::backend {
namespace {

using json = nlohmann::json;

}  // namespace

CachedBackend::CachedBackend(Backend& inner, std::filesystem::path path)
    : inner_(inner), path_(std::move(path)) {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  std::istringstream in(ReadFile(path_));
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) {
      try {
        const json j = json::parse(line);
        const json& v = j.at("value");
        entries_[j.at("key").get<std::string>()] =
            v.is_string() ? Entry(v.get<std::string>()) : Entry(v.get<double>());
      } catch (const json::exception& e) {
        throw ParseError(path_.string(), offset, std::string("bad cache line: ") + e.what());
      }
    }
    offset += line.size() + 1;
  }
}

CachedBackend::~CachedBackend() {
  try {
    Flush();
  } catch (...) {
    // Losing unflushed entries only costs repeated requests.
  }
}

std::string CachedBackend::Key(const char* endpoint, const std::string& body) const {
  return Sha256Hex(std::string(endpoint) + "\n" + inner_.Identity() + "\n" + body);
}

bool CachedBackend::Lookup(const std::string& key, Entry& out) {
  std::shared_lock lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return false;
  out = it->second;
  return true;
}

void CachedBackend::Store(const std::string& key, Entry value) {
  std::unique_lock lock(mu_);
  if (entries_.emplace(key, value).second) pending_.emplace(key, std::move(value));
}

std::string CachedBackend::Translate(const TranslationRequest& request) {
  request.Validate();
  const std::string key = Key("translate", RequestJson(request));
  Entry e;
  if (Lookup(key, e)) {
    ++hits_;
    return std::get<std::string>(e);
  }
  ++misses_;
  std::string out = inner_.Translate(request);
  Store(key, out);
  return out;
}

double CachedBackend::Entail(const EntailmentRequest& request) {
  request.Validate();
  const std::string key = Key("nli", RequestJson(request));
  Entry e;
  if (Lookup(key, e)) {
    ++hits_;
    return std::get<double>(e);
  }
  ++misses_;
  const double out = inner_.Entail(request);
  Store(key, out);
  return out;
}

void CachedBackend::Flush() {
  std::unique_lock lock(mu_);
  if (path_.empty() || pending_.empty()) return;
  std::string data =
      std::filesystem::exists(path_) ? ReadFile(path_) : std::string();
  if (!data.empty() && data.back() != '\n') data += '\n';
  for (const auto& [key, value] : pending_) {
    json line = {{"key", key}};
    if (const auto* s = std::get_if<std::string>(&value)) {
      line["value"] = *s;
    } else {
      line["value"] = std::get<double>(value);
    }
    data += line.dump() + "\n";
  }
  WriteFileAtomic(path_, data);
  pending_.clear();
}

std::size_t CachedBackend::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

long CachedBackend::hits() const { return hits_; }
long CachedBackend::misses() const { return misses_; }

}  // namespace mspider::backend
