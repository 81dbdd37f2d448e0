#pragma once

#include <stdexcept>
#include <string>

#include "mnv/field.hpp"

namespace mnv {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Binary field format: magic "MNVF", u32 LE N, f64 LE L, then N^2 samples
// as interleaved (re, im) f64 LE, row-major (row = y index).
void write_field(const ComplexField& f, const std::string& path);
ComplexField read_field(const std::string& path);

// CSV export: header x,y,re,im; one row per sample, 17 significant digits.
void write_field_csv(const ComplexField& f, const std::string& path);

}  // namespace mnv
