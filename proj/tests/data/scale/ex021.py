k = eval(input())
n = [k, k + 1, k + 3]
n[0] = n[1] + n[2]
print(n)
print(n[0] + n[1] + n[2])
print(-n[0])
print(n[1] == k + 1)
