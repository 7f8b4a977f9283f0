n = eval(input())
k = n == 7
print(k)
print(1 if k else 0)
print(n + 7)
print([n, k])
