#include "sclab/complex_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace sclab {

std::vector<Simplex> maximal_faces(const SimplicialComplex& complex) {
  std::vector<Simplex> out;
  const int top = complex.top_dim();
  for (int d = 0; d <= top; ++d) {
    if (d == top) {
      const auto& faces = complex.faces(d);
      out.insert(out.end(), faces.begin(), faces.end());
      continue;
    }
    // a face is maximal iff no (d+1)-face covers it
    const auto& above = complex.faces(d + 1);
    std::vector<char> covered(complex.faces(d).size(), 0);
    for (const Simplex& g : above) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto idx = complex.face_index(g.facet(i));
        covered[static_cast<std::size_t>(*idx)] = 1;
      }
    }
    const auto& faces = complex.faces(d);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (!covered[i]) out.push_back(faces[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string complex_to_json(const SimplicialComplex& complex, const std::string& meta_json) {
  nlohmann::json j;
  j["n"] = complex.vertex_count();
  nlohmann::json facets = nlohmann::json::array();
  for (const Simplex& f : maximal_faces(complex)) {
    facets.push_back(std::vector<int>(f.vertices().begin(), f.vertices().end()));
  }
  j["facets"] = std::move(facets);
  j["meta"] = nlohmann::json::parse(meta_json);
  return j.dump(2);
}

SimplicialComplex complex_from_json_text(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j.contains("facets")) {
    throw std::invalid_argument("complex json needs fields n and facets");
  }
  const int n = j.at("n").get<int>();
  std::vector<Simplex> facets;
  for (const auto& item : j.at("facets")) {
    facets.emplace_back(item.get<std::vector<int>>());
  }
  return SimplicialComplex::from_facets(n, facets);
}

void save_complex(const SimplicialComplex& complex, const std::string& path,
                  const std::string& meta_json) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << complex_to_json(complex, meta_json) << '\n';
}

SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return complex_from_json_text(text);
}

}  // namespace sclab
