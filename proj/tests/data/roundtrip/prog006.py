def f(n):
    return n + 1
g = f
print(g(g(1)))
print([f(0), f(1)])
