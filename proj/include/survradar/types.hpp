#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace survradar {

using cplx = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using rvec = Eigen::VectorXd;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Input that should be rank one (or nonzero) is not.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Beam geometry collapsed: a defining projection or gain vanished.
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

/// The mandatory probe leakage alone pushes SINR_D below gamma_s.
class OverJammedError : public Error {
public:
    using Error::Error;
};

/// gamma_s cannot be reached even without any jamming.
class MonitoringInfeasibleError : public Error {
public:
    using Error::Error;
};

/// The power budget does not cover the radar SINR floors.
class RadarInfeasibleError : public Error {
public:
    using Error::Error;
};

/// A numerical oracle failed to converge. Test infrastructure only.
class OracleFailure : public Error {
public:
    using Error::Error;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace survradar
