#pragma once
// Generated by generate_frozen.py. Do not edit.

namespace frozen {

struct Entry { const char* q1; const char* q2; const char* q3; const char* q6; };
struct Gate { int channel; int outcome; Entry m[3][3]; int rank; Entry frobenius_sq; const char* gate_class; };

inline constexpr Gate kGates[81] = {
    {0, 0, {{{"1/3", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/3", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/3", "0/1", "0/1", "0/1"}}}, 3, {"1/3", "0/1", "0/1", "0/1"}, "proportional_to_unitary"},
    {0, 1, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {0, 2, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "-1/6"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {0, 3, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "-1/6"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {0, 4, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {0, 5, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "-1/6"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {0, 6, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {0, 7, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "-1/6"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {0, 8, {{{"0/1", "-1/3", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "1/6", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "1/6", "0/1", "0/1"}}}, 3, {"1/3", "0/1", "0/1", "0/1"}, "invertible_not_prop_unitary"},
    {1, 0, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {1, 1, {{{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {1, 2, {{{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {1, 3, {{{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {1, 4, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {1, 5, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {1, 6, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {1, 7, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {1, 8, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "-1/3", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"5/12", "0/1", "0/1", "0/1"}, "singular"},
    {2, 0, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "-1/6"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {2, 1, {{{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {2, 2, {{{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {2, 3, {{{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {2, 4, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {2, 5, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {2, 6, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {2, 7, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {2, 8, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "1/3", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"5/12", "0/1", "0/1", "0/1"}, "singular"},
    {3, 0, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "-1/6"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {3, 1, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {3, 2, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {3, 3, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {3, 4, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {3, 5, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {3, 6, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {3, 7, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {3, 8, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "-1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}}}, 2, {"1/6", "0/1", "0/1", "0/1"}, "singular"},
    {4, 0, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {4, 1, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {4, 2, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {4, 3, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {4, 4, {{{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {4, 5, {{{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {4, 6, {{{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {4, 7, {{{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {4, 8, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "-1/3", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"5/12", "0/1", "0/1", "0/1"}, "singular"},
    {5, 0, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "-1/6"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {5, 1, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {5, 2, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {5, 3, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {5, 4, {{{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {5, 5, {{{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {5, 6, {{{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {5, 7, {{{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {5, 8, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "1/3", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"5/12", "0/1", "0/1", "0/1"}, "singular"},
    {6, 0, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {6, 1, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {6, 2, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {6, 3, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {6, 4, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {6, 5, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {6, 6, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {6, 7, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {6, 8, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/6", "0/1", "0/1", "0/1"}, "singular"},
    {7, 0, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "1/6"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "-1/6"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/3", "0/1", "0/1", "0/1"}, "singular"},
    {7, 1, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {7, 2, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {7, 3, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {7, 4, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {7, 5, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 1, {"1/4", "0/1", "0/1", "0/1"}, "singular"},
    {7, 6, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {7, 7, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"-1/2", "0/1", "0/1", "0/1"}}}, 2, {"1/2", "0/1", "0/1", "0/1"}, "singular"},
    {7, 8, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "-1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/6", "0/1", "0/1", "0/1"}, "singular"},
    {8, 0, {{{"0/1", "-1/3", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "1/6", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "1/6", "0/1", "0/1"}}}, 3, {"1/3", "0/1", "0/1", "0/1"}, "invertible_not_prop_unitary"},
    {8, 1, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "-1/3", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"5/12", "0/1", "0/1", "0/1"}, "singular"},
    {8, 2, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "-1/3", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "-1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"5/12", "0/1", "0/1", "0/1"}, "singular"},
    {8, 3, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "-1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}}}, 2, {"1/6", "0/1", "0/1", "0/1"}, "singular"},
    {8, 4, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "-1/3", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"5/12", "0/1", "0/1", "0/1"}, "singular"},
    {8, 5, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "-1/3", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "-1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"5/12", "0/1", "0/1", "0/1"}, "singular"},
    {8, 6, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/6", "0/1", "0/1", "0/1"}, "singular"},
    {8, 7, {{{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "1/6", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "-1/6", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}}, 2, {"1/6", "0/1", "0/1", "0/1"}, "singular"},
    {8, 8, {{{"2/3", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"1/6", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}}, {{"0/1", "0/1", "0/1", "0/1"}, {"0/1", "0/1", "0/1", "0/1"}, {"1/6", "0/1", "0/1", "0/1"}}}, 3, {"1/2", "0/1", "0/1", "0/1"}, "invertible_not_prop_unitary"},
};

}  // namespace frozen
