#pragma once

#include <string>

#include "sclab/complex.hpp"

namespace sclab {

// Serialized form records n, the maximal faces, and a free-form meta object;
// loading rebuilds the downward closure and ignores meta. Facets are
// lex-sorted, so serialization is a pure function of the complex.
std::string complex_to_json(const SimplicialComplex& complex,
                            const std::string& meta_json = "{}");
SimplicialComplex complex_from_json_text(const std::string& text);

std::vector<Simplex> maximal_faces(const SimplicialComplex& complex);

void save_complex(const SimplicialComplex& complex, const std::string& path,
                  const std::string& meta_json = "{}");
SimplicialComplex load_complex(const std::string& path);

}  // namespace sclab
