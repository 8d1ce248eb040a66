// The A5 worked example: the AR quiver and the two friezes drawn over it,
// transcribed cell by cell (top row first, 9 columns, "" = empty cell).
#pragma once

#include <array>
#include <string>

namespace golden {

using Grid = std::array<std::array<const char*, 9>, 5>;

inline const Grid kObjects{{
    {"{5,7}", "", "{6,8}", "", "{1,7}", "", "{2,8}", "", "{1,3}"},
    {"", "{5,8}", "", "{1,6}", "", "{2,7}", "", "{3,8}", ""},
    {"{4,8}", "", "{1,5}", "", "{2,6}", "", "{3,7}", "", "{4,8}"},
    {"", "{1,4}", "", "{2,5}", "", "{3,6}", "", "{4,7}", ""},
    {"{1,3}", "", "{2,4}", "", "{3,5}", "", "{4,6}", "", "{5,7}"},
}};

// Generalised frieze over Z[u,v,z]; "#" marks a grey diamond.
inline const Grid kModified{{
    {"z", "", "(u+z)/u*z", "", "u", "", "1/u", "", "(1+u*v+v*z)/v"},
    {"#", "(u+z)/u", "", "(u+z)/z", "#", "1", "#", "(1+u*v+v*z)/u*v", ""},
    {"(1+u*v+v*z)/u", "", "u+z", "", "1/z", "", "(1+v*z)/v", "", "(1+u*v+v*z)/u"},
    {"", "1+u*v+v*z", "#", "1", "#", "(1+v*z)/v*z", "", "1+v*z", "#"},
    {"(1+u*v+v*z)/v", "", "v", "", "1/v", "", "(1+v*z)/z", "", "z"},
}};

// Original Caldero-Chapoton frieze over Z[u,v,x,y,z].
inline const Grid kOriginal{{
    {"z", "", "(u*x+u*y+y*z+z)/u*y*z", "", "u", "", "(y+1)/u", "", "(u*v*x+v*z+x*y+y)/v*x*y"},
    {"", "(u*x+y*z+z)/u*y", "", "(u*x+u*y+z)/y*z", "", "y", "", "(u*v*x+v*y*z+v*z+x*y+x*y^2+y+y^2)/u*v*x*y", ""},
    {"(u*v*x+v*y*z+v*z+y+y^2)/u*x*y", "", "(u*x+z)/y", "", "(x+y)/z", "", "(v*z+x*y+y)/v*x", "",
     "(u*v*x+v*y*z+v*z+y+y^2)/u*x*y"},
    {"", "(u*v*x+v*z+y)/x*y", "", "x", "", "(v*z+x+x^2+x*y+y)/v*x*z", "", "(v*z+y)/x", ""},
    {"(u*v*x+v*z+x*y+y)/v*x*y", "", "v", "", "(x+1)/v", "", "(v*z+x+y)/x*z", "", "z"},
}};

}  // namespace golden
