a = eval(input())
n = a == 13
print(n)
print(1 if n else 0)
print(a + 13)
print([a, n])
