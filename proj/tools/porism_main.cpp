#include <cstdio>

int main() {
    std::puts("porism cli placeholder");
    return 0;
}
