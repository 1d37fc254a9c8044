#pragma once

// Constants computed once by tests/oracles/generate_frozen.py (mpmath, 50
// digits) from closed forms written independently of the library, then frozen.

namespace frozen {

inline constexpr double th_value_r3 = 0.99103714562101699997;

// Pekeris coefficients.
inline constexpr double pekeris_a2_c05[3] = {0.3125, 0.4375, -0.046875};
inline constexpr double pekeris_tab2[3] = {0.26720005727445409468,
                                           0.62800211165852678896,
                                           0.096495133323366020731};
inline constexpr double centrifugal_pekeris_1p2re = 0.24037384202518688271;
inline constexpr double centrifugal_ratio_1p2re = 1.004143878092797025;

// NU constants for c1 = 1, c2 = c3 = 1/2, xi = (2, 3, 1).
inline constexpr double nu_c4 = 0.0, nu_c5 = -0.25, nu_c6 = 2.0625,
                        nu_c7 = -3.0, nu_c8 = 1.0, nu_c9 = 0.8125,
                        nu_c10 = 2.0, nu_c11 = 3.6055512754639892931,
                        nu_c12 = 1.0, nu_c13 = 2.3027756377319946466;
inline constexpr double nu_residual_n2 = 10.059714732061981263;

inline constexpr double jacobi_5_07_13_04 = 0.46640475;

struct Level {
  int n;
  int kappa;
  double E;
};

// Standard spin roots, table2 preset with c_h = 0.01.
inline constexpr Level std_spin[8] = {
    {0, -2, 10.690363209789100376}, {0, -3, 10.749082767198720268},
    {0, -4, 10.835557874611734731}, {0, -5, 10.948020757453097021},
    {1, -2, 11.785003118054943995}, {1, -3, 11.831489135887157071},
    {1, -4, 11.900249996685551614}, {1, -5, 11.990193497627702209}};

// Standard pspin roots, table3 preset with C_ps = -20, c_h = -0.01.
inline constexpr double std_pspin_C = -20.0;
inline constexpr Level std_pspin[8] = {
    {1, -1, -6.8863012266625762783}, {1, -2, -6.7752607310099702975},
    {1, -3, -6.6203910993131088625}, {1, -4, -6.4313948575585207703},
    {2, -1, -5.9745254336510156089}, {2, -2, -5.8981980221790301352},
    {2, -3, -5.788780632103668802},  {2, -4, -5.6511749062294442684}};

// Ground spinor (0, -2), standard spin, table2 preset.
inline constexpr double gs_c12 = 6.8707967173054557645;
inline constexpr double gs_c13 = 732.66877571401192346;
inline constexpr double gs_F_unnormalized_at_re = 0.0006339330139752335582;
inline constexpr double gs_unnormalized_norm = 2.9529238506986672402e-7;

} // namespace frozen
