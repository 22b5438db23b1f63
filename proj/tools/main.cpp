#include <cstdio>
int main(){ std::puts("necklace cli placeholder"); return 0; }
