#pragma once

#include <stdexcept>
#include <string>

namespace knotalg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// laurent_ring
struct not_normalizable : error { using error::error; };
struct zero_evaluation_point : error { using error::error; };
struct parse_error : error {
    explicit parse_error(const std::string& what, std::size_t line = 0)
        : error(what), line(line) {}
    std::size_t line;
};

// exact_linear_algebra
struct non_square : error { using error::error; };
struct singular_matrix : error { using error::error; };
struct non_unit_transform : error { using error::error; };
struct bad_minor_size : error { using error::error; };
struct dimension_mismatch : error { using error::error; };
struct not_hermitian : error { using error::error; };

// module_orders
struct not_prime : error { using error::error; };

// seifert_invariants
struct not_seifert : error {
    explicit not_seifert(const std::string& what, std::size_t line = 0)
        : error(what), line(line) {}
    std::size_t line;
};
struct omega_at_alexander_root : error { using error::error; };

// blanchfield_form
struct convention_self_check_failed : error { using error::error; };

// ua_certificates
struct not_unimodular : error { using error::error; };
struct not_symmetric : error { using error::error; };
struct not_diagonalized : error { using error::error; };

struct certificate_error : error { using error::error; };
struct hermitian_fail : certificate_error { using certificate_error::certificate_error; };
struct determinant_fail : certificate_error { using certificate_error::certificate_error; };
struct witness_not_well_defined : certificate_error { using certificate_error::certificate_error; };
struct pairing_mismatch : certificate_error { using certificate_error::certificate_error; };
struct surjectivity_proxy_fail : certificate_error { using certificate_error::certificate_error; };
struct a1_not_diagonalizable : certificate_error { using certificate_error::certificate_error; };

// knot_cli
struct io_error : error { using error::error; };

}  // namespace knotalg
