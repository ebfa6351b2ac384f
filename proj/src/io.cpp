// Copyright 2026 The ctq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctq/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace ctq {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& doc, const char* key, std::size_t expected, bool optional) {
  if (!doc.contains(key)) {
    if (optional) return std::vector<double>(expected, 0.0);
    fail(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  }
  const json& arr = doc.at(key);
  require(arr.is_array(), ErrorCode::ParseError, std::string("field \"") + key + "\" must be an array");
  require(arr.size() == expected, ErrorCode::ParseError,
          std::string("field \"") + key + "\" has " + std::to_string(arr.size()) + " entries, expected " +
              std::to_string(expected));
  std::vector<double> out;
  out.reserve(expected);
  for (const json& v : arr) {
    require(v.is_number(), ErrorCode::ParseError, std::string("field \"") + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

json encode(const DimensionSignature& sig, std::string_view kind, const Complex* data, Index count) {
  json re = json::array();
  json im = json::array();
  for (Index i = 0; i < count; ++i) {
    re.push_back(data[i].real());
    im.push_back(data[i].imag());
  }
  return json{{"dims", sig.dims()}, {"kind", kind}, {"re", re}, {"im", im}};
}

}  // namespace

AnyState parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  require(doc.is_object(), ErrorCode::ParseError, "state file must hold a JSON object");
  require(doc.contains("dims") && doc["dims"].is_array() && !doc["dims"].empty(), ErrorCode::ParseError,
          "field \"dims\" must be a nonempty array");
  std::vector<Index> dims;
  for (const json& v : doc["dims"]) {
    require(v.is_number_integer() && v.get<long long>() >= 1, ErrorCode::ParseError, "dims must be positive integers");
    dims.push_back(static_cast<Index>(v.get<long long>()));
  }
  const DimensionSignature sig(dims);
  require(doc.contains("kind") && doc["kind"].is_string(), ErrorCode::ParseError, "field \"kind\" must be a string");
  const std::string kind = doc["kind"].get<std::string>();
  const auto n = static_cast<std::size_t>(sig.total());

  if (kind == "pure") {
    const auto re = number_array(doc, "re", n, false);
    const auto im = number_array(doc, "im", n, true);
    ComplexVector amps(sig.total());
    for (std::size_t i = 0; i < n; ++i) amps(static_cast<Index>(i)) = Complex(re[i], im[i]);
    require(sig.parts() >= 2, ErrorCode::UnsupportedState, "a pure state needs at least two parties");
    if (sig.parts() == 2) return pure_from_amplitudes(amps, sig);
    return multipartite_from_amplitudes(amps, sig);
  }
  if (kind == "density") {
    const auto re = number_array(doc, "re", n * n, false);
    const auto im = number_array(doc, "im", n * n, true);
    ComplexMatrix m(sig.total(), sig.total());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(static_cast<Index>(r), static_cast<Index>(c)) = Complex(re[r * n + c], im[r * n + c]);
    return DensityMatrix(sig, std::move(m));
  }
  fail(ErrorCode::ParseError, "field \"kind\" must be \"pure\" or \"density\"");
}

AnyState read_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

std::string state_to_json(const AnyState& state) {
  const json doc = std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DensityMatrix>) {
          // Eigen is column-major; the file is row-major.
          const Matrix<Complex> rows = s.matrix().transpose();
          return encode(s.signature(), "density", rows.data(), rows.size());
        } else {
          return encode(s.signature(), "pure", s.amplitudes().data(), s.amplitudes().size());
        }
      },
      state);
  return doc.dump(2) + "\n";
}

void write_state(const std::filesystem::path& path, const AnyState& state) {
  write_file_atomic(path, state_to_json(state));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorCode::IoError, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    require(static_cast<bool>(out), ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorCode::IoError, "cannot rename onto " + path.string());
  }
}

ComplexMatrix density_of(const AnyState& state) {
  return std::visit(
      [](const auto& s) -> ComplexMatrix {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DensityMatrix>) {
          return s.matrix();
        } else {
          return s.density();
        }
      },
      state);
}

const DimensionSignature& signature_of(const AnyState& state) {
  return std::visit([](const auto& s) -> const DimensionSignature& { return s.signature(); }, state);
}

}  // namespace ctq
