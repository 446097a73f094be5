#include "detgap/format.hpp"

#include <cstdio>

namespace detgap {

std::string fmt_fixed(double v, int places) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  std::string s = buf;
  // collapse "-0.000...0" to "0.000...0"
  if (s.size() > 1 && s[0] == '-' &&
      s.find_first_not_of("0.", 1) == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

void JsonWriter::pre_value() {
  if (stack_.empty()) return;
  if (stack_.back() == 'a') {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
}

void JsonWriter::append_escaped(const std::string& s) {
  for (char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out_ += buf;
        } else {
          out_ += c;
        }
    }
  }
}

JsonWriter& JsonWriter::obj_begin() {
  pre_value();
  out_ += '{';
  stack_.push_back('o');
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::obj_end() {
  out_ += '}';
  stack_.pop_back();
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::arr_begin() {
  pre_value();
  out_ += '[';
  stack_.push_back('a');
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::arr_end() {
  out_ += ']';
  stack_.pop_back();
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  if (!first_.back()) out_ += ',';
  first_.back() = false;
  out_ += '"';
  append_escaped(k);
  out_ += "\":";
  return *this;
}

JsonWriter& JsonWriter::raw(const std::string& token) {
  pre_value();
  out_ += token;
  return *this;
}

JsonWriter& JsonWriter::str(const std::string& s) {
  pre_value();
  out_ += '"';
  append_escaped(s);
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::boolean(bool b) { return raw(b ? "true" : "false"); }

JsonWriter& JsonWriter::integer(long long v) { return raw(std::to_string(v)); }

}  // namespace detgap
