#ifndef ERGOLAB_KEYVAL_HPP
#define ERGOLAB_KEYVAL_HPP

// Tiny "name key=value key=value" spec tokenizer used by the set / sequence /
// Folner mini-languages.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ergo {

struct SpecTokens {
  std::string head;
  std::map<std::string, std::string> kv;
  std::string tail;  // everything after head when not key=value shaped

  const std::string& require(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument("spec '" + head + "' missing parameter '" + key + "'");
    return it->second;
  }
  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  }
};

inline SpecTokens tokenize_spec(const std::string& spec) {
  std::istringstream is(spec);
  SpecTokens t;
  if (!(is >> t.head)) throw std::invalid_argument("empty spec");
  std::string word;
  while (is >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) {
      t.tail += (t.tail.empty() ? "" : " ") + word;
    } else {
      t.kv[word.substr(0, eq)] = word.substr(eq + 1);
    }
  }
  return t;
}

inline std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace ergo

#endif
