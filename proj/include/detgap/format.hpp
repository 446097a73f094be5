#pragma once

#include <string>
#include <vector>

namespace detgap {

// Fixed-decimal formatting for report values. Reports are diffed byte for
// byte, so every number that reaches an output goes through here.
std::string fmt_fixed(double v, int places);
inline std::string fmt10(double v) { return fmt_fixed(v, 10); }

// Minimal streaming JSON writer with deterministic output. Numbers are
// emitted as pre-formatted tokens so the JSON and text renderings of a run
// print identical digits.
class JsonWriter {
 public:
  JsonWriter& obj_begin();
  JsonWriter& obj_end();
  JsonWriter& arr_begin();
  JsonWriter& arr_end();
  JsonWriter& key(const std::string& k);
  JsonWriter& raw(const std::string& token);
  JsonWriter& str(const std::string& s);
  JsonWriter& boolean(bool b);
  JsonWriter& integer(long long v);
  JsonWriter& number10(double v) { return raw(fmt10(v)); }
  const std::string& out() const { return out_; }

 private:
  void pre_value();
  void append_escaped(const std::string& s);

  std::string out_;
  std::vector<char> stack_;
  std::vector<bool> first_;
};

}  // namespace detgap
