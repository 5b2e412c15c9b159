// placeholder; full CLI arrives with the cli module
#include "orbiline/render.hpp"
int main() { return 0; }
