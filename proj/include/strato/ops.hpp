#pragma once

#include "strato/field.hpp"

namespace strato {

// Leray projection of the velocity slots (components 0..2) onto divergence-free
// fields; component 3 rides along untouched. Mode-wise (Id - xi xi^T/|xi|^2).
Field4 leray_project(const Field4& f);
Field2 leray_project_h(const Field2& f);  // horizontal projection for xi_h != 0

// omega(f) = d1 f^2 - d2 f^1
ScalarField vorticity(const Field4& f);

// f_S = (grad_h^perp lap_h^{-1} omega(f), 0, 0); modes with xi_h = 0 get f_S = 0.
Field4 stratified_part(const Field4& f);
struct Decomposition {
    Field4 strat;
    Field4 osc;
};
Decomposition decompose_stratified_oscillating(const Field4& f);

// Relative divergence defect max |xi.v| / (|xi| |v|) over nonzero modes.
double divergence_defect(const Field4& f);
double divergence_defect_h(const Field2& f);

// f.grad g, pseudospectral with dealiasing. Velocity taken from f components 0..2.
Field4 advect(const Field4& f, const Field4& g);
// Horizontal transport v^h.grad_h g for the limit system.
Field2 advect_h(const Field2& v, const Field2& g);

template <int NC>
SpectralField<NC> derivative(const SpectralField<NC>& f, int axis);

template <int NC>
void apply_dealias_mask(SpectralField<NC>& f);

// Multiplier exp(t nu lap) (heat flow), per component.
template <int NC>
SpectralField<NC> heat_flow(const SpectralField<NC>& f, double nu, double t);

// Constant-coefficient skew matrix: (B U) = (0, 0, theta, -v3).
Field4 apply_B_matrix(const Field4& f);

// Broadcast a vertical profile into one component's xi_h = 0 column.
void add_vertical_profile(Field4& f, int comp, const VerticalProfile& p);
VerticalProfile extract_vertical_profile(const Field4& f, int comp);

Field2 horizontal_components(const Field4& f);
Field4 embed_horizontal(const Field2& vh);  // (v1, v2, 0, 0)

double max_velocity_amplitude(const Field4& f);  // physical-space max |v|

}  // namespace strato
